#ifndef MIXQUANT_ALLOCATION_HPP
#define MIXQUANT_ALLOCATION_HPP

namespace mixquant {

/// Split of n codepoints between the left piece (k) and the right piece (m).
struct Allocation {
    int k = 0;
    int m = 0;

    int n() const noexcept { return k + m; }
    friend bool operator==(const Allocation&, const Allocation&) = default;
};

}  // namespace mixquant

#endif
