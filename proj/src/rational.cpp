#include "cubic/rational.hpp"

#include <cctype>

namespace cubic {

std::string rational_to_string(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

std::optional<Rational> rational_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    auto parse_int = [](const std::string& t) -> std::optional<Integer> {
        if (t.empty()) return std::nullopt;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return std::nullopt;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
        return Integer(t);
    };
    if (slash == std::string::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return make_rational(*n, *d);
}

std::optional<Rational> exact_cube_root(const Rational& r) {
    auto root_of = [](const Integer& v) -> std::optional<Integer> {
        Integer a = abs(v);
        Integer root;
        const int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), 3);
        if (!exact) return std::nullopt;
        return sgn(v) < 0 ? Integer(-root) : root;
    };
    auto rn = root_of(r.get_num());
    if (!rn) return std::nullopt;
    auto rd = root_of(r.get_den());
    if (!rd) return std::nullopt;
    return make_rational(*rn, *rd);
}

std::optional<std::uint32_t> mod_reduce(const Rational& r, std::uint32_t p) {
    const std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    const std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    // den^(p-2) mod p by square-and-multiply; p is prime.
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(num * inv % p);
}

}  // namespace cubic
