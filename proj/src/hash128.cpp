#include "mpcx/hash128.hpp"

namespace mpcx {

std::string to_hex(const Hash128& h) {
    static const char digits[] = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(15 - i)] = digits[(h.hi >> (4 * i)) & 0xf];
    for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(31 - i)] = digits[(h.lo >> (4 * i)) & 0xf];
    return out;
}

} // namespace mpcx
