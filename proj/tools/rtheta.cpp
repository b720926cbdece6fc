#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rtheta/bounds.hpp"
#include "rtheta/gau_map.hpp"
#include "rtheta/linear_code.hpp"
#include "rtheta/reed_muller.hpp"

using namespace rtheta;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string theta = "2+2w";
    std::string lambda = "2+2w";
    std::string format = "table";
    std::uint64_t guard = 1ull << 26;
    unsigned jobs = 1;
    bool strict = false;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
}

json elems_json(const std::vector<Elem>& xs) {
    json arr = json::array();
    for (Elem x : xs) arr.push_back(to_string(x));
    return arr;
}

std::string join_elems(const std::vector<Elem>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(xs[i]);
    }
    return out;
}

int run_ring_info(const Options& opt) {
    const Ring& ring = Ring::of(parse_elem(opt.theta));
    const bool chain = ring.is_chain();
    if (opt.format == "json") {
        json j;
        j["theta"] = to_string(ring.theta());
        j["classification"] = chain ? "chain" : "non-chain";
        j["units"] = elems_json(ring.units());
        j["zero_divisors"] = elems_json(ring.zero_divisors());
        if (chain) {
            json ideals = json::array();
            for (const auto& ideal : ring.ideal_chain()) ideals.push_back(elems_json(ideal));
            j["ideal_chain"] = ideals;
        }
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << "theta: " << to_string(ring.theta()) << '\n';
    std::cout << "classification: " << (chain ? "chain" : "non-chain") << '\n';
    std::cout << "units: {" << join_elems(ring.units()) << "}\n";
    std::cout << "zero divisors: {" << join_elems(ring.zero_divisors()) << "}\n";
    if (chain) {
        std::cout << "ideal chain:";
        for (const auto& ideal : ring.ideal_chain()) std::cout << " {" << join_elems(ideal) << "}";
        std::cout << '\n';
    }
    return kExitOk;
}

GauMap load_map(const Options& opt, const std::string& map_file) {
    if (!map_file.empty()) return GauMap::from_table(parse_table_text(read_file(map_file)));
    return GauMap::default_for(parse_elem(opt.lambda));
}

// six comma-separated entries: a11, a22, a14, a23, a12, a13
GauParams parse_params(const std::string& text) {
    const Word entries = parse_word(text);
    if (entries.size() != 6)
        throw ParseError("expected six map parameters, got " + std::to_string(entries.size()));
    return GauParams{entries[0], entries[1], entries[2], entries[3], entries[4], entries[5]};
}

int run_gau_map_emit(const Options& opt, const std::string& params,
                     const std::string& out_path) {
    const GauMap map = params.empty()
                           ? GauMap::default_for(parse_elem(opt.lambda))
                           : GauMap::build(parse_elem(opt.lambda), parse_params(params));
    write_file(out_path, map.to_table_text());
    return kExitOk;
}

int run_gau_map_count(const Options& opt) {
    std::cout << enumerate_gau_maps(parse_elem(opt.lambda)).size() << '\n';
    return kExitOk;
}

int run_gau_map_verify(const std::string& file) {
    const TableCheck check = check_table(parse_table_text(read_file(file)));
    json j;
    j["bijective"] = check.bijective;
    if (check.lambda) j["lambda"] = to_string(*check.lambda);
    j["reverse_failures"] = elems_json(check.reverse_failures);
    j["complement_failures"] = elems_json(check.complement_failures);
    json cells = json::array();
    for (Dinucleotide d : check.fill_mismatches) cells.push_back(d.str());
    j["fill_mismatches"] = cells;
    j["ok"] = check.ok();
    std::cout << j.dump() << '\n';
    if (check.ok()) {
        std::cerr << "OK\n";
        return kExitOk;
    }
    return kExitViolation;
}

std::string rm_verification_line(const RMVerification& v) {
    std::ostringstream out;
    out << "theta=" << to_string(v.spec.theta) << " z=" << to_string(v.spec.z)
        << " r=" << v.spec.r << " m=" << v.spec.m << " n=" << v.formula.n
        << " M=" << v.formula.M << "/" << v.span_size << " d=" << v.formula.d << "/"
        << v.min_distance << " reverse=" << (v.reverse_closed ? "yes" : "no")
        << " rc=" << (v.rc_closed ? "yes" : "no")
        << (v.clean() ? " [ok]" : " [mismatch]");
    return out.str();
}

int run_rm_construct(const Options& opt, const std::string& map_file, const std::string& z,
                     int r, int m, const std::string& fasta_path, const std::string& csv_path) {
    const GauMap map = load_map(opt, map_file);
    const RMSpec spec{parse_elem(opt.theta), parse_elem(z), r, m};
    const RMVerification v = rm_verify(spec, map, opt.guard);
    if (opt.format == "json") {
        json j;
        j["theta"] = to_string(spec.theta);
        j["z"] = to_string(spec.z);
        j["r"] = r;
        j["m"] = m;
        j["n"] = v.formula.n;
        j["M_formula"] = v.formula.M.str();
        j["M_oracle"] = v.span_size;
        j["d_formula"] = v.formula.d;
        j["d_oracle"] = v.min_distance;
        j["reverse_closed"] = v.reverse_closed;
        j["rc_closed"] = v.rc_closed;
        j["generator"] = json::parse(generator_to_json(rm_generator(spec)));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << rm_verification_line(v) << '\n';
    }
    if (!fasta_path.empty()) {
        const DnaCode dna = rm_dna_code(spec, map, opt.guard);
        std::ostringstream buf;
        export_fasta(dna, buf);
        write_file(fasta_path, buf.str());
    }
    if (!csv_path.empty()) write_file(csv_path, codewords_to_csv(span(rm_generator(spec), opt.guard)));
    if (opt.strict && !v.clean()) return kExitViolation;
    return kExitOk;
}

int run_rm_verify(const Options& opt, const std::string& map_file, const std::string& z_arg,
                  int r, int m, bool sweep, int max_m, int max_r) {
    const GauMap map = load_map(opt, map_file);
    std::vector<RMSpec> grid;
    if (sweep) {
        for (Elem theta : kAllElements) {
            if (!Ring::of(theta).is_chain()) continue;
            for (Elem z : Ring::of(theta).zero_divisors()) {
                if (z == kZero) continue;
                for (int mm = 0; mm <= max_m; ++mm)
                    for (int rr = 0; rr <= std::min(mm, max_r); ++rr)
                        grid.push_back({theta, z, rr, mm});
            }
        }
    } else {
        grid.push_back({parse_elem(opt.theta), parse_elem(z_arg), r, m});
    }

    std::vector<RMVerification> results(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
            results[i] = rm_verify(grid[i], map, opt.guard);
    };
    std::vector<std::future<void>> pool;
    for (unsigned t = 1; t < opt.jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();

    int mismatches = 0;
    for (const auto& v : results) {
        std::cout << rm_verification_line(v) << '\n';
        mismatches += !v.clean();
    }
    if (mismatches > 0)
        std::cerr << "warning: " << mismatches << " of " << results.size()
                  << " cells disagree with the closed form\n";
    if (opt.strict && mismatches > 0) return kExitViolation;
    return kExitOk;
}

int run_dual(const Options& opt, const std::string& in_path, bool check) {
    const GeneratorMatrix g = generator_from_json(read_file(in_path));
    const GeneratorMatrix dual = dual_generator(g);
    std::cout << generator_to_json(dual) << '\n';
    if (check) {
        const CodewordSet closed_form = span(dual, opt.guard);
        const CodewordSet oracle = dual_brute_force(g);
        const bool same = closed_form == oracle;
        std::cerr << "closed-form dual vs annihilator oracle: " << (same ? "equal" : "DIFFER")
                  << " (|C| = " << span(g, opt.guard).size() << ", |C^perp| = " << oracle.size()
                  << ")\n";
        if (!same) return kExitViolation;
    }
    return kExitOk;
}

int run_selfdual_trivial(const Options& opt, int n) {
    const auto rep = trivial_self_dual_candidate(parse_elem(opt.theta), n);
    json j;
    j["theta"] = opt.theta;
    j["n"] = n;
    j["alphabet"] = elems_json(rep.alphabet);
    j["size"] = rep.code.size();
    j["self_orthogonal"] = rep.self_orthogonal;
    j["cardinality_matches"] = rep.cardinality_matches;
    if (rep.self_dual) j["self_dual"] = *rep.self_dual;
    const auto torsion = torsion_word_presence(rep.code);
    if (torsion) j["torsion_word"] = to_string(*torsion);
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int run_selfdual_circulant(const Options& opt, int n) {
    const Elem theta = parse_elem(opt.theta);
    const Ring& ring = Ring::of(theta);
    const auto& units = ring.units();

    std::vector<std::pair<Elem, Word>> tuples;
    for (Elem u : units) {
        std::vector<int> idx(n, 0);
        while (true) {
            Word a(n);
            for (int i = 0; i < n; ++i) a[i] = units[idx[i]];
            tuples.emplace_back(u, a);
            int i = 0;
            while (i < n && idx[i] == static_cast<int>(units.size()) - 1) idx[i++] = 0;
            if (i == n) break;
            ++idx[i];
        }
    }

    struct Hit {
        Elem u;
        Word a;
        CirculantVerdicts verdicts;
    };
    std::vector<std::optional<Hit>> hits(tuples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tuples.size(); i = next.fetch_add(1)) {
            const auto result =
                circulant_selfdual_generator(theta, tuples[i].first, tuples[i].second, opt.guard);
            if (result.verdicts.self_dual && *result.verdicts.self_dual)
                hits[i] = Hit{tuples[i].first, tuples[i].second, result.verdicts};
        }
    };
    std::vector<std::future<void>> pool;
    for (unsigned t = 1; t < opt.jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();

    std::size_t found = 0;
    for (const auto& hit : hits) {
        if (!hit) continue;
        ++found;
        json j;
        j["u"] = to_string(hit->u);
        json a = json::array();
        for (Elem e : hit->a) a.push_back(to_string(e));
        j["a"] = a;
        j["self_dual"] = true;
        j["all_units"] = hit->verdicts.all_units;
        j["reverse_closed"] = hit->verdicts.reverse_closed;
        j["rc_closed"] = hit->verdicts.rc_closed;
        std::cout << j.dump() << '\n';
    }
    std::cerr << "searched " << tuples.size() << " unit tuples, " << found << " self-dual\n";
    return kExitOk;
}

json report_json(const BoundReport& rep) {
    json j;
    j["bound"] = to_string(rep.kind);
    j["n"] = rep.n;
    j["M"] = rep.M.str();
    j["d"] = rep.d;
    j["lhs"] = rep.lhs.str();
    j["rhs"] = rep.rhs.str();
    j["verdict"] = to_string(rep.verdict);
    return j;
}

int run_bounds(const Options& opt, long long n, const std::string& m_str, long long d,
               const std::string& code_path, const std::string& map_file) {
    BigInt m_value;
    if (!code_path.empty()) {
        const CodewordSet code = codewords_from_csv(parse_elem(opt.theta), read_file(code_path));
        const GauMap map = load_map(opt, map_file);
        n = static_cast<long long>(code.length());
        m_value = code.size();
        d = min_gau_distance(code, map, 1u << 15);
    } else {
        try {
            m_value = BigInt(m_str);
        } catch (const std::runtime_error&) {
            throw ParseError("bad code size '" + m_str + "'");
        }
    }

    std::vector<BoundReport> reports{sphere_packing(n, m_value, d), singleton(n, m_value, d),
                                     plotkin(n, m_value, d)};
    const BigInt gv = gv_lower_bound(n, d);

    bool violated = false;
    if (opt.format == "json") {
        json j;
        j["n"] = n;
        j["M"] = m_value.str();
        j["d"] = d;
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(report_json(rep));
        j["bounds"] = arr;
        j["gv_lower_bound"] = gv.str();
        j["mgds"] = is_mgds(n, m_value, d);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "code parameters: n=" << n << " M=" << m_value << " d=" << d << '\n';
        for (const auto& rep : reports)
            std::cout << to_string(rep.kind) << ": lhs=" << rep.lhs << " rhs=" << rep.rhs << " -> "
                      << to_string(rep.verdict) << '\n';
        std::cout << "gilbert-varshamov: A16(n,d) >= " << gv << '\n';
        std::cout << "mgds: " << (is_mgds(n, m_value, d) ? "yes" : "no") << '\n';
    }
    for (const auto& rep : reports) violated |= rep.verdict == Verdict::Violated;
    return violated ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes over the sixteen rings Z4 + wZ4 and their DNA images"};
    app.set_config("--config")->description("key=value configuration file");
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--guard", opt.guard, "span enumeration guard")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--strict", opt.strict, "exit nonzero on formula/oracle mismatches");

    auto* ring_info = app.add_subcommand("ring-info", "classification, units, ideals")->fallthrough();
    ring_info->add_option("--theta", opt.theta, "ring parameter")->required();

    auto* gau = app.add_subcommand("gau-map", "emit, count, or verify dinucleotide maps")->fallthrough();
    gau->require_subcommand(1);
    auto* gau_emit = gau->add_subcommand("emit", "write the default map table")->fallthrough();
    std::string out_path = "-", map_params;
    gau_emit->add_option("--out", out_path, "output path");
    gau_emit->add_option("--lambda", opt.lambda, "complement shift")->capture_default_str();
    gau_emit->add_option("--params", map_params,
                         "six free entries a11,a22,a14,a23,a12,a13 (default canonical)");
    auto* gau_count = gau->add_subcommand("enumerate-count", "count all valid maps")->fallthrough();
    gau_count->add_option("--lambda", opt.lambda, "complement shift")->capture_default_str();
    auto* gau_verify = gau->add_subcommand("verify", "validate a map table file")->fallthrough();
    std::string verify_path;
    gau_verify->add_option("--file", verify_path, "map table file")->required();

    auto* rm = app.add_subcommand("rm", "reed-muller-type DNA codes")->fallthrough();
    rm->require_subcommand(1);
    std::string z_arg = "2w", map_file, fasta_path;
    int r_arg = 1, m_arg = 1, max_m = 3, max_r = 2;
    bool sweep = false;
    auto* rm_construct = rm->add_subcommand("construct", "build one code")->fallthrough();
    rm_construct->add_option("--theta", opt.theta, "ring parameter")->required();
    rm_construct->add_option("--z", z_arg, "zero divisor")->required();
    rm_construct->add_option("--r", r_arg, "order")->required();
    rm_construct->add_option("--m", m_arg, "length exponent")->required();
    rm_construct->add_option("--map", map_file, "map table file (default canonical)");
    rm_construct->add_option("--fasta", fasta_path, "export the DNA code as FASTA");
    std::string csv_path;
    rm_construct->add_option("--csv", csv_path, "export the ring codewords as CSV");
    auto* rm_ver = rm->add_subcommand("verify", "formula vs enumeration oracle")->fallthrough();
    rm_ver->add_option("--theta", opt.theta, "ring parameter");
    rm_ver->add_option("--z", z_arg, "zero divisor");
    rm_ver->add_option("--r", r_arg, "order");
    rm_ver->add_option("--m", m_arg, "length exponent");
    rm_ver->add_flag("--all", sweep, "sweep every chain ring, admissible z, and (r, m)");
    rm_ver->add_option("--max-m", max_m, "sweep limit on m")->capture_default_str();
    rm_ver->add_option("--max-r", max_r, "sweep limit on r")->capture_default_str();
    rm_ver->add_option("--map", map_file, "map table file (default canonical)");

    auto* dual = app.add_subcommand("dual", "closed-form dual of a standard-form generator")->fallthrough();
    std::string dual_in = "-";
    bool dual_check = false;
    dual->add_option("--in", dual_in, "generator json (- for stdin)");
    dual->add_flag("--check", dual_check, "compare against the annihilator oracle");

    auto* selfdual = app.add_subcommand("selfdual", "self-dual constructions")->fallthrough();
    selfdual->require_subcommand(1);
    int n_arg = 1;
    auto* sd_trivial = selfdual->add_subcommand("trivial", "constant-word candidate")->fallthrough();
    sd_trivial->add_option("--theta", opt.theta, "ring parameter")->required();
    sd_trivial->add_option("--n", n_arg, "length")->required();
    auto* sd_circ = selfdual->add_subcommand("circulant", "search (uI | circulant) unit tuples")->fallthrough();
    sd_circ->add_option("--theta", opt.theta, "ring parameter")->required();
    sd_circ->add_option("--n", n_arg, "circulant order")->required()->check(CLI::Range(1, 3));

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the four bounds")->fallthrough();
    long long bn = 0, bd = 0;
    std::string bm = "0", code_path, bounds_map_file;
    bounds_cmd->add_option("--n", bn, "length");
    bounds_cmd->add_option("--M", bm, "code size");
    bounds_cmd->add_option("--d", bd, "minimum gau distance");
    bounds_cmd->add_option("--code", code_path, "codeword csv (computes n, M, d)");
    bounds_cmd->add_option("--theta", opt.theta, "ring parameter for --code");
    bounds_cmd->add_option("--map", bounds_map_file, "map table file for --code");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ring_info->parsed()) return run_ring_info(opt);
        if (gau->parsed()) {
            if (gau_emit->parsed()) return run_gau_map_emit(opt, map_params, out_path);
            if (gau_count->parsed()) return run_gau_map_count(opt);
            if (gau_verify->parsed()) return run_gau_map_verify(verify_path);
        }
        if (rm->parsed()) {
            if (rm_construct->parsed())
                return run_rm_construct(opt, map_file, z_arg, r_arg, m_arg, fasta_path, csv_path);
            if (rm_ver->parsed())
                return run_rm_verify(opt, map_file, z_arg, r_arg, m_arg, sweep, max_m, max_r);
        }
        if (dual->parsed()) return run_dual(opt, dual_in, dual_check);
        if (selfdual->parsed()) {
            if (sd_trivial->parsed()) return run_selfdual_trivial(opt, n_arg);
            if (sd_circ->parsed()) return run_selfdual_circulant(opt, n_arg);
        }
        if (bounds_cmd->parsed())
            return run_bounds(opt, bn, bm, bd, code_path, bounds_map_file);
    } catch (const ParseError& e) {
        std::cerr << json{{"error", e.what()}, {"type", "parse"}}.dump() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}, {"type", "domain"}}.dump() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"type", "internal"}}.dump() << '\n';
        return kExitViolation;
    }
    return kExitUsage;
}
