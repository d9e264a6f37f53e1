#include "tropimpl/fixtures.hpp"

#include "tropimpl/error.hpp"

namespace tropimpl::fixtures {

LaurentPoly poly(std::initializer_list<std::tuple<Rational, long, long>> terms) {
    BiPoly p;
    for (const auto& [c, a, b] : terms) p.add_term({a, b}, c);
    return LaurentPoly(p);
}

namespace {

void need(const std::vector<Rational>& v, std::size_t k) {
    if (v.size() != k) throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(k) + " coefficients");
}

}  // namespace

std::vector<LaurentPoly> nine_ray(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    need(a, 3);
    need(b, 3);
    need(c, 3);
    return {poly({{a[0], 0, 0}, {a[1], 2, 1}, {a[2], 1, 2}}), poly({{b[0], 1, 1}, {b[1], 1, 0}, {b[2], 0, 1}}),
            poly({{c[0], 0, 1}, {c[1], 2, 0}, {c[2], 1, 2}})};
}

std::vector<LaurentPoly> alpha(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    need(a, 3);
    need(b, 3);
    need(c, 5);
    return {poly({{a[0], 2, 0}, {a[1], 3, 0}, {a[2], 0, 2}}), poly({{b[0], 0, 2}, {b[1], 0, 3}, {b[2], 2, 0}}),
            poly({{c[0], 1, 1}, {c[1], 3, 0}, {c[2], 0, 3}, {c[3], 1, 2}, {c[4], 2, 1}})};
}

std::vector<LaurentPoly> lines_and_conic(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    need(a, 3);
    need(b, 3);
    need(c, 2);
    return {poly({{a[0], 0, 0}, {a[1], 1, 0}, {a[2], 0, 1}}), poly({{b[0], 0, 0}, {b[1], 0, 1}, {b[2], 2, 0}}), poly({{c[0], 0, 0}, {c[1], 1, 1}})};
}

std::vector<LaurentPoly> nine_ray_generic() { return nine_ray({2, 3, 5}, {7, 11, 13}, {17, 19, 23}); }

std::vector<LaurentPoly> alpha_generic() { return alpha({2, 3, 5}, {7, 11, 13}, {17, 19, 23, 29, 31}); }

std::vector<LaurentPoly> lines_and_conic_generic() { return lines_and_conic({2, 3, 5}, {7, 11, 13}, {17, 19}); }

std::vector<LaurentPoly> alpha_special() { return alpha({1, -1, -1}, {1, -1, -1}, {4, -1, -1, -3, -3}); }

std::vector<LaurentPoly> lines_and_conic_special() { return lines_and_conic({-1, -1, 1}, {-1, 1, -1}, {2, -1}); }

GenericInput generic_input(std::vector<LaurentPoly> polys, std::uint64_t seed) {
    GenericInput in;
    in.polys = std::move(polys);
    in.options.seed = seed;
    return in;
}

}  // namespace tropimpl::fixtures
