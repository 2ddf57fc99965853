#include "shintani/serialize.hpp"
#include "shintani/errors.hpp"

namespace shintani {

Json to_json(const Int& x) { return x.get_str(); }

Json to_json(const Rat& x) { return shintani::to_string(x); }

Json to_json(const std::vector<Rat>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(const CyclotomicNumber& x)
{
    const CyclotomicNumber r = x.reduced();
    Json j;
    j["level"] = std::to_string(r.level());
    j["coeffs"] = to_json(r.coeffs());
    if (r.is_rational())
        j["rational"] = to_json(r.rational_value());
    return j;
}

Json to_json(const PAdicCyclotomic& x)
{
    Json j;
    j["p"] = std::to_string(x.context().prime());
    j["precision"] = std::to_string(x.context().precision());
    j["level"] = std::to_string(x.context().level());
    Json c = Json::array();
    for (i64 v : x.coeffs())
        c.push_back(std::to_string(v));
    j["coeffs"] = c;
    j["valuation"] = std::to_string(x.valuation());
    return j;
}

Json to_json(const FieldElement& x) { return to_json(x.coords()); }

Json to_json(const Ideal& a)
{
    Json j;
    // Columns of H, each in integral-basis coordinates.
    Json h = Json::array();
    const auto& H = a.hnf();
    for (std::size_t c = 0; c < H.cols(); ++c) {
        Json col = Json::array();
        for (std::size_t r = 0; r < H.rows(); ++r)
            col.push_back(to_json(H(r, c)));
        h.push_back(col);
    }
    j["hnf"] = h;
    j["denominator"] = to_json(a.denominator());
    j["norm"] = to_json(a.norm());
    return j;
}

Json to_json(const HalfOpenCone& c)
{
    Json j;
    Json g = Json::array();
    for (const auto& x : c.generators())
        g.push_back(to_json(x));
    j["generators"] = g;
    Json faces = Json::array();
    for (unsigned mask = 1; mask < (1u << c.dimension()); ++mask)
        if (c.face_included(mask)) {
            Json s = Json::array();
            for (std::size_t i = 0; i < c.dimension(); ++i)
                if (mask & (1u << i))
                    s.push_back(std::to_string(i));
            faces.push_back(s);
        }
    j["faces"] = faces;
    return j;
}

Json to_json(const ConeFunction& f)
{
    Json a = Json::array();
    for (const auto& t : f.terms())
        a.push_back({{"weight", std::to_string(t.weight)}, {"cone", to_json(t.cone)}});
    return {{"terms", a}};
}

Json to_json(const FiniteAbelianGroup& g)
{
    Json inv = Json::array();
    for (i64 n : g.invariants())
        inv.push_back(std::to_string(n));
    return {{"invariants", inv}, {"order", std::to_string(g.order())}};
}

Json to_json(const RayClassGroup& g)
{
    Json j = to_json(g.group());
    j["modulus"] = to_json(g.modulus());
    Json gens = Json::array();
    for (std::size_t i = 0; i < g.group().rank(); ++i)
        gens.push_back(to_json(g.generator_ideal(i)));
    j["generators"] = gens;
    return j;
}

Json to_json(const HeckeCharacter& chi)
{
    Json e = Json::array();
    for (i64 x : chi.exponents())
        e.push_back(std::to_string(x));
    Json signs = Json::array();
    for (int s : chi.infinity_signs())
        signs.push_back(std::to_string(s));
    return {{"group", to_json(chi.group())},
            {"order", std::to_string(chi.order())},
            {"exponents", e},
            {"conductor", to_json(chi.conductor())},
            {"infinity_signs", signs},
            {"totally_odd", chi.is_totally_odd()}};
}

Json to_json(const CheckReport& r)
{
    return {{"checks", std::to_string(r.checks)}, {"failures", std::to_string(r.failures)}, {"witnesses", r.witnesses}};
}

Json to_json(const MeasureTable& t)
{
    Json mu = Json::array();
    for (const auto& x : t.mu)
        mu.push_back(to_json(x));
    return {{"label", t.label},
            {"p", std::to_string(t.p)},
            {"q", std::to_string(t.q)},
            {"level", std::to_string(t.n)},
            {"group", to_json(t.G->group())},
            {"mu", mu},
            {"mass", to_json(t.mass())},
            {"points", std::to_string(t.points)}};
}

Json to_json(const LogMoment& m)
{
    Json j{{"k", std::to_string(m.k)},
           {"value", to_json(m.value)},
           {"precision", std::to_string(m.precision)},
           {"vanishes", m.vanishes()}};
    if (m.exact)
        j["exact"] = to_json(*m.exact);
    return j;
}

Json to_json(const SmoothingFactor& f)
{
    return {{"q", std::to_string(f.q)},
            {"chi_exponent", std::to_string(f.chi_exponent)},
            {"bracket_q", to_json(f.bracket)},
            {"valuation", std::to_string(f.valuation)},
            {"valuation_dual", std::to_string(f.valuation_dual)},
            {"bracket_reading", "<gamma> read as <N(q)> = <q>"}};
}

Json to_json(const VanishingReport& r)
{
    Json m = Json::array();
    for (const auto& x : r.moments)
        m.push_back(to_json(x));
    return {{"p", std::to_string(r.p)},
            {"level", std::to_string(r.n)},
            {"precision", std::to_string(r.M)},
            {"r", std::to_string(r.r)},
            {"smoothing", to_json(r.smoothing)},
            {"mass", to_json(r.mass)},
            {"moments", m},
            {"pass", r.pass},
            {"verdict", r.verdict},
            {"L_Sp_dual_at_0", to_json(r.lvalue_dual)},
            {"points", std::to_string(r.points)}};
}

Json field_json(const NumberField& K, const UnitGroupData& units)
{
    Json mp = Json::array();
    for (const auto& c : K.spec().minpoly)
        mp.push_back(to_json(c));
    Json basis = Json::array();
    const auto& B = K.integral_basis();
    for (std::size_t c = 0; c < B.cols(); ++c) {
        std::vector<Rat> col;
        for (std::size_t r = 0; r < B.rows(); ++r)
            col.push_back(B(r, c));
        basis.push_back(to_json(col));
    }
    Json eps = Json::array();
    for (const auto& e : units.eps)
        eps.push_back(to_json(e));
    Json roots = Json::array();
    for (double x : K.root_approx())
        roots.push_back(x);
    return {{"name", K.name()},
            {"degree", std::to_string(K.degree())},
            {"minpoly", mp},
            {"discriminant", to_json(K.discriminant())},
            {"integral_basis", basis},
            {"totally_positive_units", eps},
            {"unit_orientation", std::to_string(units.mu)},
            {"roots_approx", roots}};
}

Int int_from_json(const Json& j, const std::string& what)
{
    if (!j.is_string())
        config_error("BadConfig", what + " must be a decimal string");
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
        config_error("BadConfig", what + " is not a decimal integer");
    return x;
}

i64 i64_from_json(const Json& j, const std::string& what)
{
    const Int x = int_from_json(j, what);
    if (!x.fits_slong_p())
        config_error("BadConfig", what + " out of range");
    return x.get_si();
}

Rat rat_from_json(const Json& j, const std::string& what)
{
    if (!j.is_string())
        config_error("BadConfig", what + " must be a decimal string");
    Rat x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
        config_error("BadConfig", what + " is not a rational number");
    x.canonicalize();
    return x;
}

CyclotomicNumber cyclotomic_from_json(const Json& j)
{
    const int level = static_cast<int>(i64_from_json(j.at("level"), "level"));
    std::vector<Rat> c;
    for (const auto& x : j.at("coeffs"))
        c.push_back(rat_from_json(x, "coefficient"));
    return CyclotomicNumber(level, std::move(c));
}

std::string canonical(const Json& j) { return j.dump(); }

} // namespace shintani
