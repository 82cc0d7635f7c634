#pragma once

/**
 * @file extended.hpp
 * @brief Extended counting arithmetic for defect numbers and deficiency indices.
 *
 * Defect numbers live in N0 ∪ {inf}; the Fredholm index lives in
 * Z ∪ {-inf, +inf}.  Both are represented here as small value types with
 * total, absorbing arithmetic.
 */

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace defcalc {

/// A count in N0 ∪ {inf}.  Addition is total; infinity absorbs.
class ExtendedCount {
public:
    constexpr ExtendedCount() : value_(0), infinite_(false) {}
    constexpr ExtendedCount(std::uint64_t v) : value_(v), infinite_(false) {}

    static constexpr ExtendedCount infinity() {
        ExtendedCount c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_infinite() const { return infinite_; }

    /// Finite value; throws if infinite.
    constexpr std::uint64_t value() const {
        if (infinite_) throw std::domain_error("ExtendedCount: value() on infinity");
        return value_;
    }

    friend constexpr ExtendedCount operator+(ExtendedCount a, ExtendedCount b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtendedCount(a.value_ + b.value_);
    }

    /// Multiplication by a finite natural scalar (k * inf = inf for k >= 1; 0 * inf = 0).
    friend constexpr ExtendedCount operator*(std::uint64_t k, ExtendedCount a) {
        if (k == 0) return ExtendedCount(0);
        if (a.infinite_) return infinity();
        return ExtendedCount(k * a.value_);
    }

    friend constexpr bool operator==(ExtendedCount a, ExtendedCount b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }

    /// Total order with infinity maximal.
    friend constexpr std::strong_ordering operator<=>(ExtendedCount a, ExtendedCount b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, ExtendedCount c) { return os << c.str(); }

private:
    std::uint64_t value_;
    bool infinite_;
};

/// Deficiency-index pair (n+, n-).
struct DefectPair {
    ExtendedCount n_plus;
    ExtendedCount n_minus;

    constexpr bool equal_indices() const { return n_plus == n_minus; }

    constexpr DefectPair swapped() const { return {n_minus, n_plus}; }

    friend constexpr bool operator==(const DefectPair&, const DefectPair&) = default;

    std::string str() const { return "(" + n_plus.str() + "," + n_minus.str() + ")"; }

    friend std::ostream& operator<<(std::ostream& os, const DefectPair& p) {
        return os << p.str();
    }
};

/// A value in Z ∪ {-inf, +inf}, used for the (semi-)Fredholm index.
class SignedExtended {
public:
    constexpr SignedExtended(std::int64_t v = 0) : value_(v), sign_of_infinity_(0) {}

    static constexpr SignedExtended plus_infinity() { return SignedExtended(0, +1); }
    static constexpr SignedExtended minus_infinity() { return SignedExtended(0, -1); }

    constexpr bool is_finite() const { return sign_of_infinity_ == 0; }
    constexpr std::int64_t value() const {
        if (!is_finite()) throw std::domain_error("SignedExtended: value() on infinity");
        return value_;
    }
    constexpr int infinity_sign() const { return sign_of_infinity_; }

    friend constexpr bool operator==(SignedExtended a, SignedExtended b) {
        if (a.sign_of_infinity_ != b.sign_of_infinity_) return false;
        return a.sign_of_infinity_ != 0 || a.value_ == b.value_;
    }

    std::string str() const {
        if (sign_of_infinity_ > 0) return "+inf";
        if (sign_of_infinity_ < 0) return "-inf";
        return std::to_string(value_);
    }

    friend std::ostream& operator<<(std::ostream& os, SignedExtended v) { return os << v.str(); }

private:
    constexpr SignedExtended(std::int64_t v, int s) : value_(v), sign_of_infinity_(s) {}
    std::int64_t value_;
    int sign_of_infinity_;
};

/// Difference a - b of two counts as a signed extended integer.
/// inf - inf is rejected: the index of such an operator is not defined here.
inline SignedExtended extended_difference(ExtendedCount a, ExtendedCount b) {
    if (a.is_infinite() && b.is_infinite())
        throw std::domain_error("extended_difference: inf - inf is undefined");
    if (a.is_infinite()) return SignedExtended::plus_infinity();
    if (b.is_infinite()) return SignedExtended::minus_infinity();
    return SignedExtended(static_cast<std::int64_t>(a.value()) -
                          static_cast<std::int64_t>(b.value()));
}

enum class FredholmKind { fredholm, left_semi, right_semi, none };

/// Kernel/cokernel data of a closed, densely defined operator with closed range.
struct FredholmClass {
    FredholmKind kind = FredholmKind::none;
    ExtendedCount dim_ker;
    ExtendedCount dim_coker;

    bool consistent() const {
        switch (kind) {
            case FredholmKind::fredholm:
                return !dim_ker.is_infinite() && !dim_coker.is_infinite();
            case FredholmKind::left_semi:
                return !dim_ker.is_infinite();
            case FredholmKind::right_semi:
                return !dim_coker.is_infinite();
            case FredholmKind::none:
                return true;
        }
        return false;
    }
};

/// ind(T) = dim ker(T) - dim ker(T*).  Requires a (semi-)Fredholm kind.
inline SignedExtended fredholm_index(const FredholmClass& c) {
    if (c.kind == FredholmKind::none)
        throw std::invalid_argument("fredholm_index: operator is not semi-Fredholm");
    if (!c.consistent())
        throw std::invalid_argument("fredholm_index: kind inconsistent with dimensions");
    return extended_difference(c.dim_ker, c.dim_coker);
}

/// Index of a product: ind(T2 T1) = ind(T1) + ind(T2).
/// (+inf) + (-inf) is rejected.
inline SignedExtended index_of_product(SignedExtended a, SignedExtended b) {
    if (!a.is_finite() && !b.is_finite() && a.infinity_sign() != b.infinity_sign())
        throw std::domain_error("index_of_product: (+inf) + (-inf) is undefined");
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;
    return SignedExtended(a.value() + b.value());
}

}  // namespace defcalc
