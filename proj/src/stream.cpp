#include "xg/stream.hpp"

#include <stdexcept>

namespace xg {

FileWordSource::FileWordSource(std::istream& in, unsigned bits) : in_(in), bits_(bits) {
    if (bits_ != 8 && bits_ != 16 && bits_ != 32 && bits_ != 64)
        throw std::invalid_argument("word size must be 8, 16, 32 or 64");
}

std::uint64_t FileWordSource::next() {
    unsigned char bytes[8];
    in_.read(reinterpret_cast<char*>(bytes), bits_ / 8);
    if (!in_)
        throw std::runtime_error("input stream exhausted");
    std::uint64_t word = 0;
    for (unsigned i = 0; i < bits_ / 8; ++i)
        word |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return word;
}

} // namespace xg
