#include "cubic/catalog.hpp"

#include "cubic/cayley_dickson.hpp"
#include "cubic/poly_io.hpp"

namespace cubic {

CatalogEntry herm3_norm(int level) {
    const int d = 1 << level;
    const int n = 3 + 3 * d;
    auto var = [&](int i) { return Poly::variable(n, i); };
    const Poly alpha = var(0), beta = var(1), gamma = var(2);
    auto block = [&](int start) {
        std::vector<Poly> v;
        for (int i = 0; i < d; ++i) v.push_back(var(start + i));
        return v;
    };
    const std::vector<Poly> a = block(3), b = block(3 + d), c = block(3 + 2 * d);
    auto sum_sq = [&](const std::vector<Poly>& v) {
        Poly s(n);
        for (const auto& p : v) s += p * p;
        return s;
    };
    const Poly cross = cd_mul_coords(cd_mul_coords(a, b), c)[0];  // re((a·b)·c)
    Poly norm = alpha * beta * gamma - alpha * sum_sq(a) - beta * sum_sq(b) -
                gamma * sum_sq(c) + make_rational(2) * cross;

    static const char* names[] = {"herm3_R", "herm3_C", "herm3_H", "herm3_O"};
    Vec unit(n), seed(n);
    unit[0] = unit[1] = unit[2] = 1;  // the identity matrix
    seed[0] = 1;                      // the rank-one diagonal idempotent
    return CatalogEntry{
        names[level],
        CubicForm(std::move(norm)),
        n,
        ExpectedVerdicts{true, false, 2 * d, "Herm3 cubic norm, level " + std::to_string(level)},
        unit,
        seed,
    };
}

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> cat;
    for (int k = 0; k < 4; ++k) cat.push_back(herm3_norm(k));

    auto entry = [](std::string name, const char* text, int n, ExpectedVerdicts exp,
                    std::optional<Vec> unit, std::optional<Vec> seed) {
        return CatalogEntry{std::move(name), CubicForm(parse_poly(text, n)), n,
                            std::move(exp), std::move(unit), std::move(seed)};
    };
    auto vec = [](std::vector<long> v) {
        Vec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = make_rational(v[i]);
        return r;
    };

    cat.push_back(entry("triple_product", "x0*x1*x2", 3,
                        {true, false, 0, "EKP; reducible over Q"},
                        vec({1, 1, 1}), vec({1, 0, 0})));
    cat.push_back(entry("linear_times_quadric", "x0*x1^2 + x0*x2^2 + x0*x3^2", 4,
                        {true, false, std::nullopt,
                         "EKP; reducible over C; Sing V(f) has no rational points"},
                        vec({1, 1, 0, 0}), std::nullopt));
    cat.push_back(entry("fermat", "x0^3 + x1^3 + x2^3", 3,
                        {false, false, std::nullopt, "not homaloidal; interpolation inconsistent"},
                        std::nullopt, std::nullopt));
    cat.push_back(entry("cone", "x0^3", 3,
                        {false, true, std::nullopt, "cone over a point; never homaloidal"},
                        std::nullopt, std::nullopt));
    cat.push_back(entry("conic_tangent", "x0^2*x2 - x0*x1^2", 3,
                        {false, false, std::nullopt,
                         "homaloidal but not EKP; rational transform at denominator degree 1"},
                        std::nullopt, vec({0, 0, 1})));
    return cat;
}

const CatalogEntry* catalog_find(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace cubic
