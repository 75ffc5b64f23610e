#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubic/rational.hpp"

namespace cubic {

// 31-bit primes used by the modular interpolation solver.
inline constexpr std::uint32_t kSolvePrimes[] = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u,
    2147483543u, 2147483497u, 2147483489u, 2147483477u, 2147483423u, 2147483399u,
    2147483353u, 2147483323u, 2147483269u, 2147483249u, 2147483237u, 2147483179u,
    2147483171u, 2147483137u, 2147483123u, 2147483077u, 2147483069u, 2147483059u};

// Barrett reduction mod a fixed p < 2^31; valid for any 64-bit operand.
class Barrett {
  public:
    explicit Barrett(std::uint32_t p) : p_(p) {
        m_ = static_cast<unsigned __int128>(~std::uint64_t{0}) / p + 1;  // ceil(2^64 / p)
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * m_) >> 64);
        std::int64_t r = static_cast<std::int64_t>(x - q * p_);
        while (r < 0) r += p_;
        while (r >= static_cast<std::int64_t>(p_)) r -= p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return reduce(static_cast<std::uint64_t>(a) * b);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a ? p_ - a : 0; }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const { return pow(a, p_ - 2); }

  private:
    std::uint32_t p_;
    unsigned __int128 m_;
};

// Incremental row echelon mod p. Rows are fed one at a time; pivot rows
// are stored normalized (leading entry 1). In augmented mode the last
// column is the right-hand side and a row reducing to (0..0 | c != 0)
// reports inconsistency.
class ModEchelon {
  public:
    enum class RowFate { Zero, NewPivot, Inconsistent };

    ModEchelon(Barrett p, int unknowns, bool augmented)
        : p_(p),
          unknowns_(unknowns),
          cols_(unknowns + (augmented ? 1 : 0)),
          augmented_(augmented),
          pivot_of_col_(unknowns, -1) {}

    // Reduces `row` (length cols()) against the stored pivots.
    // `tag` records row provenance (sample index).
    RowFate add_row(std::vector<std::uint32_t> row, int tag);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool full_column_rank() const { return rank() == unknowns_; }

    // Provenance tags of the current pivot rows.
    std::vector<int> pivot_tags() const { return tags_; }
    int inconsistent_tag() const { return inconsistent_tag_; }

    // Unique solution of the augmented system; requires full column rank.
    std::vector<std::uint32_t> solve_unique() const;

  private:
    Barrett p_;
    int unknowns_;
    int cols_;
    bool augmented_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<int> pivot_col_;
    std::vector<int> tags_;
    std::vector<int> pivot_of_col_;
    int inconsistent_tag_ = -1;
};

// Chinese-remainder accumulator over a growing prime product, with
// balanced rational reconstruction (Wang) per coefficient.
class CrtReconstructor {
  public:
    explicit CrtReconstructor(std::size_t count) : residues_(count, 0), modulus_(1) {}

    void add_prime(std::uint32_t p, const std::vector<std::uint32_t>& values);

    // nullopt if any coefficient fails to reconstruct under the current
    // modulus (add more primes and retry).
    std::optional<std::vector<Rational>> reconstruct() const;

    const Integer& modulus() const { return modulus_; }

  private:
    std::vector<Integer> residues_;
    Integer modulus_;
};

// Balanced rational reconstruction of r mod m; nullopt when no p/q with
// |p|, q <= sqrt(m/2) exists.
std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m);

}  // namespace cubic
