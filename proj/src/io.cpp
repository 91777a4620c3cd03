#include "echarge/io.hpp"

#include "echarge/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fmt/format.h>
#include <set>

namespace echarge::io {

using json = nlohmann::json;

std::string format_number(double x) {
    if(x == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {
    std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
        byte = std::min(byte, text.size());
        std::size_t line = 1, col = 1;
        for(std::size_t i = 0; i + 1 < byte; ++i) {
            if(text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void schema_error(const std::string &path, const std::string &what) { throw ParseError(fmt::format("schema error at {}: {}", path, what)); }

    void check_keys(const json &obj, const std::string &path, std::initializer_list<const char *> allowed, std::initializer_list<const char *> required) {
        if(!obj.is_object()) schema_error(path, "expected an object");
        const std::set<std::string> ok(allowed.begin(), allowed.end());
        for(const auto &[key, _] : obj.items())
            if(!ok.contains(key)) schema_error(path + "." + key, "unknown field");
        for(const char *key : required)
            if(!obj.contains(key)) schema_error(path + "." + key, "missing required field");
    }

    long get_dim(const json &obj, const char *key, const std::string &path) {
        const auto &v = obj.at(key);
        if(!v.is_number_integer()) schema_error(path + "." + key, "expected an integer");
        const auto d = v.get<long>();
        if(d < 1) schema_error(path + "." + key, fmt::format("dimension must be >= 1, got {}", d));
        return d;
    }

    double get_real(const json &v, const std::string &path) {
        if(!v.is_number()) schema_error(path, "expected a number");
        return v.get<double>();
    }

    cplx get_complex(const json &v, const std::string &path) {
        if(!v.is_array() || v.size() != 2) schema_error(path, "expected an [re, im] pair");
        return {get_real(v[0], path + "[0]"), get_real(v[1], path + "[1]")};
    }

    BipartiteState parse_state(const json &st, BipartiteDims dims, const std::string &path, const Tolerances &tol) {
        check_keys(st, path, {"kind", "data"}, {"kind", "data"});
        const auto &kind = st.at("kind");
        if(!kind.is_string()) schema_error(path + ".kind", "expected a string");
        const auto &data = st.at("data");
        if(!data.is_array()) schema_error(path + ".data", "expected an array");
        const long n = dims.joint();
        try {
            if(kind == "pure") {
                if(static_cast<long>(data.size()) != n)
                    throw ShapeError(fmt::format("{}.data has {} amplitudes but dims give dA*dB = {}", path, data.size(), n));
                ComplexVector v(n);
                for(long i = 0; i < n; ++i) v(i) = get_complex(data[static_cast<std::size_t>(i)], fmt::format("{}.data[{}]", path, i));
                return validate_state(dims, std::move(v), tol);
            }
            if(kind == "density") {
                if(static_cast<long>(data.size()) != n)
                    throw ShapeError(fmt::format("{}.data has {} rows but dims give dA*dB = {}", path, data.size(), n));
                ComplexMatrix m(n, n);
                for(long i = 0; i < n; ++i) {
                    const auto &row = data[static_cast<std::size_t>(i)];
                    if(!row.is_array()) schema_error(fmt::format("{}.data[{}]", path, i), "expected a row array");
                    if(static_cast<long>(row.size()) != n)
                        throw ShapeError(fmt::format("{}.data[{}] has {} entries but dims give dA*dB = {}", path, i, row.size(), n));
                    for(long j = 0; j < n; ++j) m(i, j) = get_complex(row[static_cast<std::size_t>(j)], fmt::format("{}.data[{}][{}]", path, i, j));
                }
                return validate_state(dims, std::move(m), tol);
            }
        } catch(const ValidationError &e) {
            throw ValidationError(e.invariant(), path + ": " + e.detail(), e.magnitude());
        }
        schema_error(path + ".kind", "expected \"pure\" or \"density\"");
    }
} // namespace

Ensemble parse_ensemble(std::string_view text, const Tolerances &tol) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch(const json::parse_error &e) {
        const auto [line, col] = line_col(text, e.byte);
        throw ParseError(fmt::format("syntax error at line {}, column {}: {}", line, col, e.what()));
    }
    check_keys(root, "$", {"schema_version", "label", "dims", "members"}, {"schema_version", "dims", "members"});
    const auto &ver = root.at("schema_version");
    if(!ver.is_number_integer() || ver.get<long>() != kSchemaVersion)
        schema_error("$.schema_version", fmt::format("unsupported schema version {} (expected {})", ver.dump(), kSchemaVersion));

    std::optional<std::string> label;
    if(root.contains("label")) {
        if(!root["label"].is_string()) schema_error("$.label", "expected a string");
        label = root["label"].get<std::string>();
    }

    const auto &jd = root.at("dims");
    check_keys(jd, "$.dims", {"dA", "dB"}, {"dA", "dB"});
    const BipartiteDims dims{get_dim(jd, "dA", "$.dims"), get_dim(jd, "dB", "$.dims")};
    dims.validate();

    const auto &jm = root.at("members");
    if(!jm.is_array() || jm.empty()) schema_error("$.members", "expected a nonempty array");
    std::vector<Member> members;
    for(std::size_t i = 0; i < jm.size(); ++i) {
        const std::string path = fmt::format("$.members[{}]", i);
        check_keys(jm[i], path, {"prob", "state"}, {"prob", "state"});
        const double prob = get_real(jm[i].at("prob"), path + ".prob");
        members.push_back({prob, parse_state(jm[i].at("state"), dims, path + ".state", tol)});
    }
    return Ensemble(dims, std::move(members), std::move(label), tol);
}

namespace {
    std::string pair(const cplx &z) { return "[" + format_number(z.real()) + ", " + format_number(z.imag()) + "]"; }
} // namespace

std::string write_ensemble(const Ensemble &e) {
    std::string out = "{\n";
    out += fmt::format("  \"schema_version\": {},\n", kSchemaVersion);
    if(e.label()) out += "  \"label\": " + json(*e.label()).dump() + ",\n";
    out += fmt::format("  \"dims\": {{\"dA\": {}, \"dB\": {}}},\n", e.dims().dA, e.dims().dB);
    out += "  \"members\": [\n";
    for(std::size_t i = 0; i < e.size(); ++i) {
        const auto &m = e.members()[i];
        out += "    {\"prob\": " + format_number(m.prob) + ", \"state\": {";
        if(m.state.is_pure_form()) {
            out += "\"kind\": \"pure\", \"data\": [";
            const auto &v = m.state.vector();
            for(Eigen::Index k = 0; k < v.size(); ++k) out += (k ? ", " : "") + pair(v(k));
            out += "]}}";
        } else {
            out += "\"kind\": \"density\", \"data\": [\n";
            const auto &mat = m.state.matrix();
            for(Eigen::Index r = 0; r < mat.rows(); ++r) {
                out += "      [";
                for(Eigen::Index c = 0; c < mat.cols(); ++c) out += (c ? ", " : "") + pair(mat(r, c));
                out += r + 1 < mat.rows() ? "],\n" : "]\n";
            }
            out += "    ]}}";
        }
        out += i + 1 < e.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

namespace {
    using ojson = nlohmann::ordered_json;

    ojson bits(double v, const char *provenance = "computed") { return ojson{{"value", v}, {"unit", "bits"}, {"provenance", provenance}}; }

    ojson flags_json(const StructureFlags &f) {
        ojson j{{"all_pure", f.all_pure},
                {"mutually_orthogonal", f.mutually_orthogonal},
                {"all_maximally_entangled", f.all_maximally_entangled},
                {"all_product", f.all_product},
                {"support_size", f.support_size}};
        if(f.orthogonality_witness)
            j["orthogonality_witness"] = {{"first", f.orthogonality_witness->first},
                                          {"second", f.orthogonality_witness->second},
                                          {"overlap", f.orthogonality_witness->overlap}};
        return j;
    }
} // namespace

nlohmann::ordered_json report_json(const Ensemble &e, const ChargeReport &r, const ReportContext &ctx) {
    ojson j;
    j["tool"]    = "echarge";
    j["version"] = kToolVersion;
    ojson input{{"path", ctx.input_path}, {"dims", {{"dA", e.dims().dA}, {"dB", e.dims().dB}}}, {"members", e.size()}, {"probs", e.probabilities()}};
    if(e.label()) input["label"] = *e.label();
    j["input"]      = input;
    j["tolerances"] = {{"profile", ctx.tolerance_profile},
                       {"hermiticity_tol", ctx.tolerances.hermiticity_tol},
                       {"trace_tol", ctx.tolerances.trace_tol},
                       {"eigenvalue_clamp", ctx.tolerances.eigenvalue_clamp},
                       {"orthogonality_tol", ctx.tolerances.orthogonality_tol},
                       {"prob_floor", ctx.tolerances.prob_floor}};
    j["seed"]            = ctx.seed;
    j["structure"]       = flags_json(r.flags);
    j["shannon_entropy"] = bits(r.shannon);
    j["chi_A"]           = r.chi_a ? bits(*r.chi_a) : ojson(nullptr);
    j["chi_B"]           = r.chi_b ? bits(*r.chi_b) : ojson(nullptr);
    ojson uppers         = ojson::array();
    for(const auto &b : r.upper_bounds) {
        auto entry = bits(b.value, b.name == "external_gate_cost" ? "supplied" : "computed");
        entry["name"] = b.name;
        uppers.push_back(entry);
    }
    j["upper_bounds"] = uppers;
    auto lower        = bits(r.lower_bound.value);
    lower["name"]        = r.lower_bound.name;
    lower["informative"] = r.lower_bound.informative;
    j["lower_bound"]     = lower;
    j["exact_value"]     = r.exact_value ? bits(*r.exact_value) : ojson(nullptr);
    j["exact_rule"]      = r.exact_value ? ojson(r.exact_rule) : ojson(nullptr);
    j["interval"]        = {{"lo", bits(r.interval.lo)}, {"hi", bits(r.interval.hi)}};
    j["verdict"]         = std::string(to_string(r.verdict));
    if(r.accessible_info)
        j["accessible_info"] = {{"lo", bits(r.accessible_info->lo)}, {"hi", bits(r.accessible_info->hi)}};
    ojson ent = ojson::array();
    for(double v : r.member_entanglement) ent.push_back(bits(v));
    j["member_entanglement"] = ent;
    if(r.known_value) {
        auto kv      = bits(r.known_value->value, "annotated");
        kv["source"] = r.known_value->source;
        j["known_value"] = kv;
    } else {
        j["known_value"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

std::string structure_summary(const Ensemble &e, const StructureFlags &f) {
    return fmt::format("members={} dims={}x{} all_pure={} mutually_orthogonal={} all_maximally_entangled={} all_product={} support_size={}", e.size(),
                       e.dims().dA, e.dims().dB, f.all_pure, f.mutually_orthogonal, f.all_maximally_entangled, f.all_product, f.support_size);
}

std::string report_text(const Ensemble &e, const ChargeReport &r, const ReportContext &ctx) {
    std::string out;
    out += fmt::format("echarge {}  input: {}{}\n", kToolVersion, ctx.input_path, e.label() ? " (" + *e.label() + ")" : "");
    out += fmt::format("tolerance profile: {}\n", ctx.tolerance_profile);
    out += "structure: " + structure_summary(e, r.flags) + "\n";
    out += fmt::format("H(X)            = {} bits\n", format_number(r.shannon));
    if(r.chi_a) out += fmt::format("chi_A           = {} bits\n", format_number(*r.chi_a));
    if(r.chi_b) out += fmt::format("chi_B           = {} bits\n", format_number(*r.chi_b));
    for(const auto &b : r.upper_bounds) out += fmt::format("upper {:<22} = {} bits\n", b.name, format_number(b.value));
    out += fmt::format("lower {:<22} = {} bits{}\n", r.lower_bound.name, format_number(r.lower_bound.value), r.lower_bound.informative ? "" : " (uninformative)");
    if(r.accessible_info)
        out += fmt::format("accessible info in [{}, {}] bits\n", format_number(r.accessible_info->lo), format_number(r.accessible_info->hi));
    out += fmt::format("N in [{}, {}] bits\n", format_number(r.interval.lo), format_number(r.interval.hi));
    if(r.exact_value) out += fmt::format("exact N = {} bits ({})\n", format_number(*r.exact_value), r.exact_rule);
    out += fmt::format("verdict: {}\n", to_string(r.verdict));
    if(r.known_value) out += fmt::format("annotation: N = {} bits [{}]\n", format_number(r.known_value->value), r.known_value->source);
    for(const auto &n : r.notes) out += "note: " + n + "\n";
    return out;
}

std::string sweep_csv(std::span<const FamilyReport> rows) {
    std::string out(kSweepHeader);
    out += '\n';
    for(const auto &f : rows)
        out += fmt::format("{},{},{},{},{},{}\n", format_number(f.theta), format_number(f.entanglement_per_state), format_number(f.theorem1_bound),
                           format_number(f.refined_bound), format_number(f.lower_bound), to_string(f.charge.verdict));
    return out;
}

} // namespace echarge::io
