#ifndef OTD_BITSTATS_HPP
#define OTD_BITSTATS_HPP

#include <cstdint>

namespace otd {

// Opt-in high-water mark for the bit size of rationals produced by arithmetic.
// Thread-local, so concurrent instances measure independently. The bench
// command uses this to report the largest intermediate value of a run.
namespace bitstats {

extern thread_local bool enabled;
extern thread_local std::uint64_t max_bits;

inline void observe(std::uint64_t bits) {
    if (bits > max_bits) max_bits = bits;
}

struct Scope {
    Scope() {
        enabled = true;
        max_bits = 0;
    }
    ~Scope() { enabled = false; }
    std::uint64_t peak() const { return max_bits; }
};

} // namespace bitstats

} // namespace otd

#endif
