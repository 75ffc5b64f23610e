#include "cubic/cayley_dickson.hpp"

#include <stdexcept>

namespace cubic {

CDElem::CDElem(int lvl, std::vector<Rational> c) : level(lvl), coords(std::move(c)) {
    if (level < 0 || level > 3) throw std::invalid_argument("level must be in 0..3");
    if (coords.size() != (std::size_t{1} << level))
        throw std::invalid_argument("coordinate count must be 2^level");
}

CDElem CDElem::zero(int level) {
    return CDElem(level, std::vector<Rational>(std::size_t{1} << level, Rational(0)));
}

CDElem CDElem::basis(int level, int i) {
    CDElem e = zero(level);
    e.coords.at(i) = 1;
    return e;
}

CDElem cd_mul(const CDElem& a, const CDElem& b) {
    if (a.level != b.level) throw std::invalid_argument("cd_mul: level mismatch");
    return CDElem(a.level, cd_mul_coords(a.coords, b.coords));
}

CDElem cd_conj(const CDElem& a) {
    CDElem r = a;
    for (std::size_t i = 1; i < r.coords.size(); ++i) r.coords[i] = -r.coords[i];
    return r;
}

Rational cd_norm(const CDElem& a) {
    Rational s(0);
    for (const auto& c : a.coords) s += c * c;
    return s;
}

Rational cd_re(const CDElem& a) { return a.coords[0]; }

CDElem cd_add(const CDElem& a, const CDElem& b) {
    if (a.level != b.level) throw std::invalid_argument("cd_add: level mismatch");
    CDElem r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

CDElem cd_neg(const CDElem& a) {
    CDElem r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

}  // namespace cubic
