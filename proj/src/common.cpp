#include "qpc/common.hpp"

#include <limits>

namespace qpc {

std::uint64_t ipow_checked(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp != 0) {
        if (exp & 1) {
            if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
                throw std::overflow_error("ipow_checked: overflow");
            r *= base;
        }
        exp >>= 1;
        if (exp != 0) {
            if (base != 0 && base > std::numeric_limits<std::uint64_t>::max() / base)
                throw std::overflow_error("ipow_checked: overflow");
            base *= base;
        }
    }
    return r;
}

}  // namespace qpc
