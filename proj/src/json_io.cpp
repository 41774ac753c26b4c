#include "pcp/json_io.hpp"

#include <stdexcept>

namespace pcp {

namespace {

BigInt bigint_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(s);
}

BigRat rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(bigint_from_string(s));
    BigInt num = bigint_from_string(s.substr(0, slash));
    BigInt den = bigint_from_string(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
    return BigRat(num, den);
}

// Accepts the canonical "p/n^e" form as well as any n-representable "a/b".
NAdic nadic_from_string(int base, const std::string& s) {
    auto caret = s.find('^');
    BigRat q;
    if (caret != std::string::npos) {
        auto slash = s.find('/');
        if (slash == std::string::npos || slash > caret)
            throw std::invalid_argument("malformed n-adic literal \"" + s + "\"");
        BigInt num = bigint_from_string(s.substr(0, slash));
        BigInt b = bigint_from_string(s.substr(slash + 1, caret - slash - 1));
        BigInt e = bigint_from_string(s.substr(caret + 1));
        if (e < 0 || e > 100000) throw std::invalid_argument("exponent out of range in \"" + s + "\"");
        q = BigRat(num, pow_int(b, e.convert_to<unsigned long>()));
    } else {
        q = rational_from_string(s);
    }
    auto v = NAdic::from_rational(base, q);
    if (!v)
        throw std::invalid_argument("\"" + s + "\" is not an n-adic rational for n = " +
                                    std::to_string(base));
    return *v;
}

}  // namespace

Json to_json(const NAdic& v) { return v.str(); }

NAdic nadic_from_json(int base, const Json& j) {
    return nadic_from_string(base, j.get<std::string>());
}

Json to_json(const ClopenSet& s) {
    Json out = Json::array();
    for (const auto& c : s.components()) out.push_back(Json::array({c.lo.str(), c.hi.str()}));
    return out;
}

ClopenSet clopen_from_json(int base, const Json& j) {
    std::vector<Interval> comps;
    for (const auto& pair : j) {
        comps.push_back(Interval{nadic_from_json(base, pair.at(0)), nadic_from_json(base, pair.at(1))});
    }
    return ClopenSet(base, std::move(comps));
}

Json to_json(const StepFunction& f) {
    Json out = Json::array();
    for (const auto& p : f.pieces()) {
        Json piece;
        piece["interval"] = Json::array({p.comp.lo.str(), p.comp.hi.str()});
        piece["re"] = rat_string(p.val.re);
        piece["im"] = rat_string(p.val.im);
        out.push_back(std::move(piece));
    }
    return out;
}

StepFunction step_from_json(int base, const Json& j) {
    std::vector<StepFunction::Piece> pieces;
    for (const auto& pj : j) {
        Interval comp{nadic_from_json(base, pj.at("interval").at(0)),
                      nadic_from_json(base, pj.at("interval").at(1))};
        Scalar val(rational_from_string(pj.at("re").get<std::string>()),
                   rational_from_string(pj.at("im").get<std::string>()));
        pieces.push_back(StepFunction::Piece{std::move(comp), std::move(val)});
    }
    return StepFunction(base, std::move(pieces));
}

Json to_json(const GElem& g) {
    Json out;
    out["r"] = g.r.str();
    out["k"] = g.k;
    return out;
}

GElem gelem_from_json(int base, const Json& j) {
    return GElem{nadic_from_json(base, j.at("r")), j.at("k").get<long>()};
}

Json to_json(const HElem& h) {
    Json out = to_json(h.g);
    out["p"] = h.p;
    return out;
}

HElem helem_from_json(int base, const Json& j) {
    return HElem{gelem_from_json(base, j), j.at("p").get<long>()};
}

Json to_json(const PartialMap& m) {
    Json out;
    out["g"] = to_json(m.group());
    out["domain"] = to_json(m.domain());
    return out;
}

PartialMap partial_map_from_json(int base, const Json& j) {
    return PartialMap(gelem_from_json(base, j.at("g")), clopen_from_json(base, j.at("domain")));
}

Json to_json(const SlotSet& s) {
    Json out = Json::array();
    for (const auto& c : s.all()) out.push_back(to_json(c));
    return out;
}

SlotSet slotset_from_json(int base, const Json& j) {
    std::vector<ClopenSet> per;
    for (const auto& c : j) per.push_back(clopen_from_json(base, c));
    return SlotSet(std::move(per));
}

Json to_json(const GroupoidElement& g) {
    Json out;
    out["lambda"] = g.lambda().digits();
    out["mu"] = g.mu().digits();
    out["tail"] = g.tail();
    return out;
}

GroupoidElement groupoid_from_json(int base, const Json& j) {
    Word lambda(base, j.at("lambda").get<std::vector<int>>());
    Word mu(base, j.at("mu").get<std::vector<int>>());
    std::string tail = j.contains("tail") ? j.at("tail").get<std::string>() : "z";
    return GroupoidElement(std::move(lambda), std::move(mu), std::move(tail));
}

Json to_json(const YGroupoidElement& g) {
    Json out = to_json(g.base());
    out["i"] = g.i();
    out["q"] = g.q();
    return out;
}

YGroupoidElement y_groupoid_from_json(int base, int slots, const Json& j) {
    return YGroupoidElement(groupoid_from_json(base, j), j.at("i").get<int>(),
                            j.at("q").get<int>(), slots);
}

Json to_json(const AlgebraElement& a) {
    Json out;
    out["session"] = Json{{"n", a.session().n}, {"k", a.session().k}};
    Json terms = Json::array();
    for (const auto& [h, f] : a.terms()) {
        Json term;
        if (a.session().is_cuntz()) {
            term["g"] = to_json(h.g);
            term["f"] = to_json(f.slot(0));
        } else {
            term["g"] = to_json(h);
            Json slots = Json::array();
            for (int t = 0; t < f.slots(); ++t) slots.push_back(to_json(f.slot(t)));
            term["f"] = std::move(slots);
        }
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

AlgebraElement element_from_json(const Json& j) {
    Session s{j.at("session").at("n").get<int>(), j.at("session").at("k").get<int>()};
    AlgebraElement out = AlgebraElement::zero(s);
    for (const auto& term : j.at("terms")) {
        if (s.is_cuntz()) {
            GElem g = gelem_from_json(s.n, term.at("g"));
            out = out + AlgebraElement::monomial(s, g, step_from_json(s.n, term.at("f")));
        } else {
            HElem h = helem_from_json(s.n, term.at("g"));
            std::vector<StepFunction> slots;
            for (const auto& fj : term.at("f")) slots.push_back(step_from_json(s.n, fj));
            out = out + AlgebraElement::monomial(s, h, SlotCoeff(std::move(slots)));
        }
    }
    return out;
}

Json to_json(const GroupPredicate& p) {
    if (p.kind() != GroupPredicate::Kind::custom) return Json{{"name", p.name()}};
    Json custom;
    if (p.r_min()) custom["r_min"] = p.r_min()->str();
    switch (p.k_sign()) {
        case GroupPredicate::KSign::any: custom["k_sign"] = "any"; break;
        case GroupPredicate::KSign::zero: custom["k_sign"] = "zero"; break;
        case GroupPredicate::KSign::positive: custom["k_sign"] = "pos"; break;
        case GroupPredicate::KSign::negative: custom["k_sign"] = "neg"; break;
        case GroupPredicate::KSign::nonnegative: custom["k_sign"] = "nonneg"; break;
        case GroupPredicate::KSign::nonpositive: custom["k_sign"] = "nonpos"; break;
    }
    return Json{{"custom", custom}};
}

GroupPredicate predicate_from_json(int base, const Json& j) {
    if (j.contains("name")) {
        std::string name = j.at("name").get<std::string>();
        if (name == "UHF") return GroupPredicate::uhf();
        if (name == "RefinementTAF") return GroupPredicate::refinement_taf();
        if (name == "Triangular") return GroupPredicate::triangular();
        throw std::invalid_argument("unknown predicate name: " + name);
    }
    const Json& custom = j.at("custom");
    std::optional<NAdic> r_min;
    if (custom.contains("r_min")) r_min = nadic_from_json(base, custom.at("r_min"));
    GroupPredicate::KSign k_sign = GroupPredicate::KSign::any;
    if (custom.contains("k_sign")) {
        std::string ks = custom.at("k_sign").get<std::string>();
        if (ks == "any") k_sign = GroupPredicate::KSign::any;
        else if (ks == "zero") k_sign = GroupPredicate::KSign::zero;
        else if (ks == "pos") k_sign = GroupPredicate::KSign::positive;
        else if (ks == "neg") k_sign = GroupPredicate::KSign::negative;
        else if (ks == "nonneg") k_sign = GroupPredicate::KSign::nonnegative;
        else if (ks == "nonpos") k_sign = GroupPredicate::KSign::nonpositive;
        else throw std::invalid_argument("unknown k_sign: " + ks);
    }
    return GroupPredicate::custom(std::move(r_min), k_sign);
}

Json to_json(const SessionConfig& cfg) {
    Json out;
    out["n"] = cfg.n;
    out["k"] = cfg.k;
    out["seed"] = cfg.seed;
    out["samples"] = cfg.samples;
    out["max_word_len"] = cfg.max_word_len;
    out["grid_max_abs_k"] = cfg.grid_max_abs_k;
    out["grid_max_exp"] = cfg.grid_max_exp;
    return out;
}

Json to_json(const RelationReport& rep, const SessionConfig& cfg) {
    Json out;
    out["suite"] = rep.suite;
    out["config"] = to_json(cfg);
    Json rels = Json::array();
    for (const auto& e : rep.relations) {
        Json r;
        r["label"] = e.label;
        r["pass"] = e.pass;
        r["witness"] = e.witness;
        rels.push_back(std::move(r));
    }
    out["relations"] = std::move(rels);
    out["pass"] = rep.all_pass();
    return out;
}

}  // namespace pcp
