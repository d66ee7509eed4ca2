#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cammo {

/// Per-pixel instance labeling: 0 is background/static, 1..255 are
/// instance ids. Row-major, top-to-bottom.
class InstanceMask {
 public:
  InstanceMask(int width, int height)
      : width_(width), height_(height),
        values_(static_cast<std::size_t>(width) * height, 0) {}

  InstanceMask(int width, int height, std::vector<std::uint8_t> values)
      : width_(width), height_(height), values_(std::move(values)) {
    if (width_ < 1 || height_ < 1 ||
        values_.size() != static_cast<std::size_t>(width_) * height_) {
      throw std::invalid_argument("InstanceMask: value count does not match dimensions");
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  std::uint8_t at(int row, int col) const {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  void set(int row, int col, std::uint8_t value) {
    values_[static_cast<std::size_t>(row) * width_ + col] = value;
  }

  const std::vector<std::uint8_t>& values() const noexcept { return values_; }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> values_;
};

}  // namespace cammo
