#ifndef HYPERREC_TEXT_HPP
#define HYPERREC_TEXT_HPP

// text.hpp - number formatting shared by the text emitters
//
// std::to_chars produces the shortest decimal string that round-trips,
// which keeps serialized output byte-identical across runs and platforms.

#include <charconv>
#include <stdexcept>
#include <string>

namespace hyperrec {

inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, res.ptr);
}

}  // namespace hyperrec

#endif
