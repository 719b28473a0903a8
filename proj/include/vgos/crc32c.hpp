#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace vgos {

/// CRC-32C (Castagnoli), software table implementation. Used for feature-file
/// checksums, checkpoint digests and config digests.
class Crc32c {
public:
    void update(const void* data, std::size_t len);
    std::uint32_t value() const noexcept { return state_ ^ 0xffffffffu; }

private:
    std::uint32_t state_ = 0xffffffffu;
};

std::uint32_t crc32c(const void* data, std::size_t len);
std::uint32_t crc32c(std::string_view text);

}  // namespace vgos
