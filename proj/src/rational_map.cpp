#include "curveforge/rational_map.hpp"

#include "curveforge/poly_ops.hpp"

namespace curveforge {

namespace {

template <ExactField K>
void check_form(const BinaryForm<K>& p, const char* name) {
    if (!p.is_homogeneous())
        throw InputError(std::string("map component ") + name + " is not a binary form");
}

UniPoly<Rat> lcm_poly(const UniPoly<Rat>& a, const UniPoly<Rat>& b) {
    return make_monic(divmod(a * b, gcd_poly(a, b)).first);
}

std::pair<UniPoly<Rat>, UniPoly<Rat>> reduce_fraction(const UniPoly<Rat>& num, const UniPoly<Rat>& den) {
    if (num.is_zero())
        return {num, UniPoly<Rat>(Rat(1))};
    auto g = gcd_poly(num, den);
    auto n = divmod(num, g).first;
    auto d = divmod(den, g).first;
    Rat s = d.leading_coefficient().inverse();
    return {n * s, d * s};
}

}  // namespace

template <ExactField K>
int RationalMap<K>::degree() const {
    for (const auto* p : {&f, &g, &h})
        if (!p->is_zero())
            return p->degree().value();
    return 0;
}

template <ExactField K>
BinaryForm<K> common_factor(const BinaryForm<K>& f, const BinaryForm<K>& g, const BinaryForm<K>& h) {
    BinaryForm<K> acc;
    for (const auto* p : {&f, &g, &h}) {
        if (p->is_zero())
            continue;
        acc = acc.is_zero() ? gcd_form(*p, *p) : gcd_form(acc, *p);
    }
    if (acc.is_zero())
        throw InputError("all map components are zero");
    return acc;
}

template <ExactField K>
RationalMap<K> make_map(const BinaryForm<K>& f, const BinaryForm<K>& g, const BinaryForm<K>& h) {
    check_form(f, "f");
    check_form(g, "g");
    check_form(h, "h");
    std::optional<int> m;
    for (const auto* p : {&f, &g, &h}) {
        if (p->is_zero())
            continue;
        if (m && *m != p->degree().value())
            throw InputError("map components must have equal degrees");
        m = p->degree().value();
    }
    if (!m)
        throw InputError("all map components are zero");
    BinaryForm<K> c = common_factor(f, g, h);
    RationalMap<K> map{*divide_exact(f, c), *divide_exact(g, c), *divide_exact(h, c)};
    if (map.degree() == 0)
        throw InputError("constant map");

    const BinaryForm<K>* pivot = !map.h.is_zero() ? &map.h : (!map.g.is_zero() ? &map.g : &map.f);
    K scale;
    if constexpr (std::is_same_v<K, Rat>) {
        BigInt num = 0, den = 1;
        for (const auto* p : {&map.f, &map.g, &map.h}) {
            if (p->is_zero())
                continue;
            Rat ct = content(*p);
            num = gcd(num, ct.num());
            den = lcm(den, ct.den());
        }
        scale = Rat(den, num);
        if (pivot->leading_coefficient().sign() < 0)
            scale = -scale;
    } else {
        bool rational = true;
        for (const auto* p : {&map.f, &map.g, &map.h})
            rational = rational && to_rational(*p).has_value();
        if (rational) {
            auto r = make_map(*to_rational(map.f), *to_rational(map.g), *to_rational(map.h));
            return {convert<QuadExt>(r.f), convert<QuadExt>(r.g), convert<QuadExt>(r.h)};
        }
        scale = pivot->leading_coefficient().inverse();
    }
    map.f *= scale;
    map.g *= scale;
    map.h *= scale;
    return map;
}

template <ExactField K>
BinaryForm<K> substitute_forms(const TriPoly<K>& F, const RationalMap<K>& map) {
    if (!F.is_homogeneous())
        throw InputError("curve polynomial is not homogeneous");
    return compose(F, std::array<BinaryForm<K>, 3>{map.f, map.g, map.h});
}

template <ExactField K>
bool verify_param(const TriPoly<K>& F, const RationalMap<K>& map) {
    return substitute_forms(F, map).is_zero();
}

AffineView affine_view(const RationalMap<Rat>& map) {
    if (map.h.is_zero())
        throw NotApplicable("the map lies on the line at infinity; it has no affine view");
    auto h = dehomogenize_form(map.h);
    AffineView v;
    std::tie(v.x_num, v.x_den) = reduce_fraction(dehomogenize_form(map.f), h);
    std::tie(v.y_num, v.y_den) = reduce_fraction(dehomogenize_form(map.g), h);
    return v;
}

RationalMap<Rat> map_from_affine(const AffineView& view) {
    if (view.x_den.is_zero() || view.y_den.is_zero())
        throw InputError("zero denominator");
    UniPoly<Rat> h = lcm_poly(view.x_den, view.y_den);
    UniPoly<Rat> f = view.x_num * divmod(h, view.x_den).first;
    UniPoly<Rat> g = view.y_num * divmod(h, view.y_den).first;
    int m = 0;
    for (const auto* p : {&f, &g, &h})
        if (!p->is_zero())
            m = std::max(m, p->degree().value());
    if (m == 0)
        throw InputError("constant map");
    return make_map(homogenize_univariate(f, m), homogenize_univariate(g, m), homogenize_univariate(h, m));
}

RationalMap<Rat> parse_map(const ExprSource& src) {
    auto parts = split_top_level(src.text, ';');
    if (parts.size() == 2) {
        AffineView v;
        for (int i = 0; i < 2; ++i) {
            ExprSource part{parts[i], src.origin + (i == 0 ? " (x)" : " (y)")};
            std::pair<UniPoly<Rat>, UniPoly<Rat>> fr;
            try {
                fr = parse_fraction(part, "t");
            } catch (const UnknownVariable&) {
                fr = parse_fraction(part, "T");
            }
            (i == 0 ? v.x_num : v.y_num) = fr.first;
            (i == 0 ? v.x_den : v.y_den) = fr.second;
        }
        return map_from_affine(v);
    }
    if (parts.size() == 3) {
        std::array<BinaryForm<Rat>, 3> forms;
        for (int i = 0; i < 3; ++i) {
            ExprSource part{parts[i], src.origin + " (" + "fgh"[i] + ")"};
            try {
                forms[i] = parse_poly<2>(part, kFormNames);
            } catch (const UnknownVariable&) {
                forms[i] = parse_poly<2>(part, kFormNamesUpper);
            }
        }
        return make_map(forms[0], forms[1], forms[2]);
    }
    throw InputError(src.origin + ": a map is written 'x(t);y(t)' or 'f(u,v);g(u,v);h(u,v)'");
}

template <ExactField K>
std::string render_map(const RationalMap<K>& map) {
    return "(" + render_poly(map.f, kFormNames) + " : " + render_poly(map.g, kFormNames) + " : " +
           render_poly(map.h, kFormNames) + ")";
}

std::string render_affine(const AffineView& view) {
    return "x = " + render_fraction(view.x_num, view.x_den, "t") + ", y = " +
           render_fraction(view.y_num, view.y_den, "t");
}

template struct RationalMap<Rat>;
template struct RationalMap<QuadExt>;

#define CF_INSTANTIATE_MAP(K)                                                                               \
    template BinaryForm<K> common_factor<K>(const BinaryForm<K>&, const BinaryForm<K>&, const BinaryForm<K>&); \
    template RationalMap<K> make_map<K>(const BinaryForm<K>&, const BinaryForm<K>&, const BinaryForm<K>&);    \
    template BinaryForm<K> substitute_forms<K>(const TriPoly<K>&, const RationalMap<K>&);                     \
    template bool verify_param<K>(const TriPoly<K>&, const RationalMap<K>&);                                  \
    template std::string render_map<K>(const RationalMap<K>&);

CF_INSTANTIATE_MAP(Rat)
CF_INSTANTIATE_MAP(QuadExt)

}  // namespace curveforge
