#include "cubic/modular.hpp"

#include <stdexcept>

namespace cubic {

ModEchelon::RowFate ModEchelon::add_row(std::vector<std::uint32_t> row, int tag) {
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("ModEchelon: bad row length");
    for (int c = 0; c < unknowns_; ++c) {
        if (row[c] == 0) continue;
        const int pr = pivot_of_col_[c];
        if (pr < 0) {
            // New pivot: normalize so the leading entry is 1.
            const std::uint32_t s = p_.inv(row[c]);
            for (int j = c; j < cols_; ++j) row[j] = p_.mul(row[j], s);
            pivot_of_col_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(row));
            pivot_col_.push_back(c);
            tags_.push_back(tag);
            return RowFate::NewPivot;
        }
        const std::uint32_t f = row[c];
        const auto& prow = rows_[pr];
        row[c] = 0;
        for (int j = c + 1; j < cols_; ++j) {
            if (prow[j] == 0) continue;
            row[j] = p_.sub(row[j], p_.mul(f, prow[j]));
        }
    }
    if (augmented_ && row[cols_ - 1] != 0) {
        inconsistent_tag_ = tag;
        return RowFate::Inconsistent;
    }
    return RowFate::Zero;
}

std::vector<std::uint32_t> ModEchelon::solve_unique() const {
    if (!augmented_) throw std::logic_error("solve_unique needs an augmented system");
    if (!full_column_rank()) throw std::logic_error("solve_unique needs full column rank");
    std::vector<std::uint32_t> x(unknowns_, 0);
    for (int c = unknowns_ - 1; c >= 0; --c) {
        const auto& row = rows_[pivot_of_col_[c]];
        std::uint32_t v = row[cols_ - 1];
        for (int j = c + 1; j < unknowns_; ++j) {
            if (row[j] == 0 || x[j] == 0) continue;
            v = p_.sub(v, p_.mul(row[j], x[j]));
        }
        x[c] = v;  // pivot is normalized to 1
    }
    return x;
}

void CrtReconstructor::add_prime(std::uint32_t p, const std::vector<std::uint32_t>& values) {
    if (values.size() != residues_.size())
        throw std::invalid_argument("CrtReconstructor: size mismatch");
    const Integer pz(static_cast<unsigned long>(p));
    if (modulus_ == 1) {
        for (std::size_t i = 0; i < values.size(); ++i)
            residues_[i] = Integer(static_cast<unsigned long>(values[i]));
        modulus_ = pz;
        return;
    }
    // x = r (mod M), x = v (mod p): x = r + M * ((v - r) * M^-1 mod p).
    Integer minv;
    if (!mpz_invert(minv.get_mpz_t(), modulus_.get_mpz_t(), pz.get_mpz_t()))
        throw std::logic_error("CRT: moduli not coprime");
    for (std::size_t i = 0; i < values.size(); ++i) {
        Integer diff = Integer(static_cast<unsigned long>(values[i])) - residues_[i] % pz;
        Integer t = (diff * minv) % pz;
        if (sgn(t) < 0) t += pz;
        residues_[i] += modulus_ * t;
    }
    modulus_ *= pz;
}

std::optional<std::vector<Rational>> CrtReconstructor::reconstruct() const {
    std::vector<Rational> out;
    out.reserve(residues_.size());
    for (const auto& r : residues_) {
        auto q = rational_reconstruct(r, modulus_);
        if (!q) return std::nullopt;
        out.push_back(std::move(*q));
    }
    return out;
}

std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m) {
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
    Integer r0 = m, r1 = r % m;
    if (sgn(r1) < 0) r1 += m;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
    Integer num = r1, den = t1;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    // A common factor between denominator and modulus invalidates the answer.
    if (gcd(den, m) != 1) return std::nullopt;
    return make_rational(num, den);
}

}  // namespace cubic
