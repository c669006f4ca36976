// SPDX-License-Identifier: Apache-2.0

#include <optional>
#include <string>

#include "mock3d/compositor.hpp"

namespace mock3d {

void validate_stack(const LayerStack& stack) {
  if (stack.layers.empty())
    throw std::invalid_argument("layer stack is empty");
  if (stack.eye > stack.layers.size())
    throw std::invalid_argument("eye index " + std::to_string(stack.eye) +
                                " is outside the stack of " +
                                std::to_string(stack.layers.size()));
  int shapes = 0;
  int foregrounds = 0;
  for (const StackLayer& l : stack.layers) {
    if (l.role == LayerRole::kShapeMap) ++shapes;
    if (l.role == LayerRole::kForeground) ++foregrounds;
  }
  if (shapes != 1)
    throw std::invalid_argument("layer stack needs exactly one shape map, got " +
                                std::to_string(shapes));
  if (foregrounds > 1)
    throw std::invalid_argument("layer stack has more than one foreground");
}

RasterImage composite_stack(const LayerStack& stack, const RasterImage* env,
                            const CompositeParams& p,
                            const ShapeDecodeOptions& decode) {
  validate_stack(stack);

  const StackLayer* shape_layer = nullptr;
  const RasterImage* fg = nullptr;
  for (const StackLayer& l : stack.layers) {
    if (l.role == LayerRole::kShapeMap) shape_layer = &l;
    if (l.role == LayerRole::kForeground) fg = &l.image;
  }
  const ShapeMap sm = decode_shape_map(shape_layer->image, decode);

  RasterImage bg(sm.width(), sm.height());
  std::optional<RasterImage> eye_side;
  if (env) eye_side = *env;

  for (std::size_t i = 0; i < stack.layers.size(); ++i) {
    const StackLayer& l = stack.layers[i];
    if (l.role != LayerRole::kPaint) continue;
    if (i < stack.eye) {
      if (l.image.width() != bg.width() || l.image.height() != bg.height())
        throw std::invalid_argument("back layer " + std::to_string(i) +
                                    " does not match the shape map size");
      bg = over(l.image, bg);
    } else {
      if (!eye_side)
        eye_side = RasterImage(l.image.width(), l.image.height(),
                               {0.0f, 0.0f, 0.0f, 1.0f});
      if (l.image.width() != eye_side->width() ||
          l.image.height() != eye_side->height())
        throw std::invalid_argument("eye-side layer " + std::to_string(i) +
                                    " does not match the environment size");
      eye_side = over(l.image, *eye_side);
    }
  }
  return composite(sm, fg, bg, eye_side ? &*eye_side : nullptr, p);
}

}  // namespace mock3d
