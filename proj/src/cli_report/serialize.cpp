#include <sstream>

#include "hd/cli.hpp"

namespace hd::cli {

std::string dec(uint64_t v) { return std::to_string(v); }
std::string dec(int64_t v) { return std::to_string(v); }

Json to_json(const ResidueInt& r) { return dec(r.value()); }

Json to_json(const WPoly& w) {
    Json a = Json::array();
    for (const auto& t : w.terms()) a.push_back({dec(int64_t(t.e4)), dec(int64_t(t.e6)), dec(t.c)});
    return a;
}

Json to_json(const UPoly& u) {
    Json a = Json::array();
    for (uint64_t c : u.raw()) a.push_back(dec(c));
    return a;
}

Json to_json(const LocFrac& x) {
    Json den = Json::object();
    for (std::size_t i = 0; i < kLocalizerCount; ++i)
        if (x.den()[i] != 0) den[localizer_name(Localizer(i))] = dec(int64_t(x.den()[i]));
    return {{"num", to_json(x.num())}, {"den", den}};
}

Json to_json(const FracPoly& z) { return {{"num", to_json(z.num())}, {"f_exp", dec(uint64_t(z.f_exp()))}}; }

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json scan_row_json(const ScanRow& r) {
    return {{"p", dec(r.p)},
            {"class_mod_12", dec(int64_t(r.class_mod_12))},
            {"psi_degree", dec(int64_t(r.psi_degree))},
            {"degree_ok", r.degree_ok},
            {"golem_01", r.golem_01},
            {"golem_10", r.golem_10},
            {"proportional", r.proportional},
            {"constant_c", r.constant_c ? Json(dec(*r.constant_c)) : Json(nullptr)},
            {"counterexample", r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample)}};
}

namespace {

const char* b(bool v) { return v ? "true" : "false"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

}  // namespace

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "p,class_mod_12,psi_degree,degree_ok,golem_01,golem_10,proportional,constant_c,counterexample\n";
    for (const auto& r : rows)
        os << r.p << ',' << r.class_mod_12 << ',' << r.psi_degree << ',' << b(r.degree_ok) << ',' << b(r.golem_01) << ','
           << b(r.golem_10) << ',' << b(r.proportional) << ',' << (r.constant_c ? dec(*r.constant_c) : "") << ','
           << csv_field(r.counterexample) << '\n';
    return os.str();
}

Json lift_row_json(const LiftRow& r) {
    Json j = {{"p", dec(r.p)},
              {"a", dec(r.a)},
              {"b", dec(r.b)},
              {"mod", dec(uint64_t(r.mod))},
              {"verified", r.verified},
              {"lambda", r.lambda ? to_json(*r.lambda) : Json(nullptr)},
              {"extendable", r.extendable ? Json(*r.extendable) : Json(nullptr)}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

Json summary_json(const VerifySummary& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows) rows.push_back(lift_row_json(r));
    return {{"summary",
             {{"p", dec(s.p)},
              {"mod", dec(uint64_t(s.mod))},
              {"mode", s.exhaustive ? "exhaustive" : "sampled"},
              {"eligible", dec(uint64_t(s.eligible))},
              {"constructed", dec(uint64_t(s.constructed))},
              {"verified", dec(uint64_t(s.verified))},
              {"failed", dec(uint64_t(s.failed))}}},
            {"rows", rows}};
}

std::string lift_csv(const std::vector<LiftRow>& rows) {
    std::ostringstream os;
    os << "p,a,b,mod,verified,lambda,extendable\n";
    for (const auto& r : rows)
        os << r.p << ',' << r.a << ',' << r.b << ',' << r.mod << ',' << b(r.verified) << ','
           << (r.lambda ? dec(r.lambda->value()) : "") << ',' << (r.extendable ? b(*r.extendable) : "") << '\n';
    return os.str();
}

}  // namespace hd::cli
