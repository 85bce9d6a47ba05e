#include "knotcalc/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "knotcalc/bounds.hpp"
#include "knotcalc/bracket.hpp"
#include "knotcalc/builtins.hpp"
#include "knotcalc/checkerboard.hpp"
#include "knotcalc/doubles.hpp"

namespace knot {

namespace {

int exit_code_for(errc c) {
    switch (c) {
        case errc::malformed_code:
        case errc::bad_arc_multiplicity:
        case errc::nonplanar_code:
        case errc::unrealizable_code:
        case errc::split_or_link_input:
            return 2;
        case errc::not_two_colorable:
        case errc::non_integer_result:
        case errc::lemma_check_failed:
            return 4;
        default:
            return 3;
    }
}

struct InputOpts {
    std::string pd, dt, name, file;
    bool pd_set = false;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    auto* pd = cmd->add_option("--pd", in.pd, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
    pd->expected(1);
    // an explicitly given empty PD code is the unknot
    pd->each([&in](const std::string&) { in.pd_set = true; });
    auto* dt = cmd->add_option("--dt", in.dt, "DT code, e.g. \"4 6 2\"");
    auto* name = cmd->add_option("--name", in.name,
                                 "built-in diagram: unknot, trefoil, trefoil-lh, figure8, k3, k5, ...");
    auto* file = cmd->add_option("--file", in.file, "file with one diagram per line");
    pd->excludes(dt)->excludes(name)->excludes(file);
    dt->excludes(name)->excludes(file);
    name->excludes(file);
}

PlanarDiagram parse_line(const std::string& raw) {
    std::string line = raw;
    std::string label;
    auto colon = line.find(':');
    if (colon != std::string::npos && line.find('(') > colon) {
        label = line.substr(0, colon);
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
            label.pop_back();
        line = line.substr(colon + 1);
    }
    bool is_pd = line.find('X') != std::string::npos;
    PlanarDiagram d = is_pd ? parse_pd(line) : parse_dt(line);
    d.name = label;
    return d;
}

std::vector<PlanarDiagram> load_inputs(const InputOpts& in) {
    if (in.pd_set) {
        PlanarDiagram d = parse_pd(in.pd);
        return {std::move(d)};
    }
    if (!in.dt.empty())
        return {parse_dt(in.dt)};
    if (!in.name.empty())
        return {builtin(in.name)};
    if (!in.file.empty()) {
        std::ifstream is(in.file);
        if (!is)
            fail(errc::malformed_code, "cannot open file '" + in.file + "'");
        std::vector<PlanarDiagram> out;
        std::string line;
        while (std::getline(is, line)) {
            std::string stripped = line.substr(0, line.find('#'));
            if (stripped.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            out.push_back(parse_line(stripped));
        }
        if (out.empty())
            fail(errc::malformed_code, "file '" + in.file + "' contains no diagrams");
        return out;
    }
    fail(errc::malformed_code, "no input diagram: use --pd, --dt, --name or --file");
}

Engine pick_engine(const std::string& flag) {
    if (!flag.empty())
        return parse_engine(flag);
    if (const char* env = std::getenv("KNOT_ENGINE"); env && *env)
        return parse_engine(env);
    return Engine::automatic;
}

std::string csv_cell(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

// tb via Ng's theorem from the already-computed report fields.
int tb_ng_of(const InvariantReport& rep) {
    return Quarter{rep.m.num - 2 * *rep.sigma - 4}.as_integer();
}

BlowupSite parse_site(const std::string& spec, int sign) {
    BlowupSite site;
    site.sign = sign;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v == 0)
                throw std::invalid_argument(tok);
            site.strands.push_back({std::abs(v), v > 0 ? +1 : -1});
        } catch (const std::exception&) {
            fail(errc::malformed_code, "bad site entry '" + tok + "' (expected signed arc labels)");
        }
    }
    return site;
}

SlicingData parse_slicing(const std::string& spec) {
    SlicingData data;
    std::istringstream is(spec);
    std::string pair;
    while (std::getline(is, pair, ';')) {
        int p = 0, n = 0;
        char comma = 0;
        std::istringstream ps(pair);
        if (!(ps >> p >> comma >> n) || comma != ',' || (ps >> std::ws, !ps.eof()))
            fail(errc::malformed_code, "bad slicing entry '" + pair + "' (expected \"p,n\")");
        data.pairs.emplace_back(p, n);
    }
    if (data.pairs.empty())
        fail(errc::malformed_code, "empty slicing data");
    return data;
}

nlohmann::ordered_json interval_json(const TnuInterval& iv) {
    nlohmann::ordered_json j;
    j["lower"] = iv.lower;
    j["upper"] = iv.upper;
    auto& src = j["sources"] = nlohmann::ordered_json::array();
    for (const auto& [endpoint, origin] : iv.sources)
        src.push_back({{"endpoint", endpoint}, {"origin", origin}});
    return j;
}

int cmd_invariants(const InputOpts& in, bool csv, Engine engine, std::ostream& out,
                   std::ostream& err) {
    std::vector<PlanarDiagram> diagrams = load_inputs(in);
    if (csv)
        out << "name,n,w,nplus,X,Y,s0,sigma,m,tb,tb_mirror,jones\n";
    for (const PlanarDiagram& d : diagrams) {
        InvariantReport rep = invariant_report(d, engine);
        if (rep.tb && tb_ng_of(rep) != *rep.tb) {
            err << "internal inconsistency: tb via Ng = " << tb_ng_of(rep)
                << " but w - X = " << *rep.tb << "\n";
            return 4;
        }
        if (csv) {
            out << rep.name << ',' << rep.n << ',' << rep.w << ',' << rep.nplus << ','
                << csv_cell(rep.X) << ',' << csv_cell(rep.Y) << ',' << csv_cell(rep.s0) << ','
                << csv_cell(rep.sigma) << ',' << rep.m.str() << ',' << csv_cell(rep.tb) << ','
                << csv_cell(rep.tb_mirror) << ',' << rep.jones.str() << '\n';
        } else {
            out << rep.to_json() << '\n';
        }
    }
    return 0;
}

int cmd_family(int max_n, std::ostream& out) {
    if (max_n < 1)
        fail(errc::non_positive, "--max-n must be at least 1");
    out << "n,crossings,w,X,Y,tb,minus_tb_mirror,tnu_lower,tnu_upper,gap\n";
    for (int n = 1; n <= max_n; ++n) {
        PlanarDiagram d = family_k2n1(n);
        CheckerboardColoring col = checkerboard(d);
        int tb = tb_wx(d);
        int tbm = tb_wx(mirror(d));
        TnuInterval iv = combine({ln_bounds(tb, tbm), slicing_bounds({{{1, 0}}})});
        out << n << ',' << d.size() << ',' << writhe(d) << ',' << col.X << ',' << col.Y << ','
            << tb << ',' << -tbm << ',' << iv.lower << ',' << iv.upper << ','
            << (-tbm - iv.upper) << '\n';
    }
    return 0;
}

int cmd_double(const InputOpts& in, int twists, int splice, std::ostream& out) {
    PlanarDiagram companion = load_inputs(in).front();
    DoubleResult dbl = splice > 0 ? whitehead_double({companion, twists}, splice)
                                  : whitehead_double({companion, twists});
    out << to_pd_string(dbl.diagram) << '\n';
    return 0;
}

int cmd_blowup(const InputOpts& in, const std::string& site_spec, int sign, std::ostream& out) {
    PlanarDiagram d = load_inputs(in).front();
    BlowupSite site = parse_site(site_spec, sign);
    out << to_pd_string(blowup(d, site)) << '\n';
    return 0;
}

int cmd_verify_lemma(const InputOpts& in, int crossing, int k, Engine engine, std::ostream& out) {
    PlanarDiagram companion = load_inputs(in).front();
    Engine e = engine == Engine::automatic ? Engine::tl : engine;
    Lemma31Report rep = verify_lemma31(companion, {crossing}, k, e);
    out << "site linking numbers: " << rep.linking_plus << ", " << rep.linking_minus << "\n"
        << "+1 blow-up: " << rep.jones_blowup_plus.str() << " == D_+(K-,k): "
        << (rep.plus_matches ? "PASS" : "FAIL") << "\n"
        << "-1 blow-up: " << rep.jones_blowup_minus.str() << " == D_+(K-,k-4): "
        << (rep.minus_matches ? "PASS" : "FAIL") << "\n"
        << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? 0 : 4;
}

int cmd_bounds(const InputOpts& in, bool have_input, const std::string& slicing,
               std::optional<int> tb_opt, std::optional<int> tbm_opt, Engine engine,
               std::ostream& out) {
    std::vector<TnuInterval> parts;
    if (have_input) {
        PlanarDiagram d = load_inputs(in).front();
        parts.push_back(ln_bounds(tb_wx(d), tb_wx(mirror(d))));
    } else if (tb_opt && tbm_opt) {
        parts.push_back(ln_bounds(*tb_opt, *tbm_opt));
    }
    if (!slicing.empty())
        parts.push_back(slicing_bounds(parse_slicing(slicing)));
    if (parts.empty())
        fail(errc::empty_data, "need a diagram, --tb/--tb-mirror, or --slicing data");
    (void)engine;
    out << interval_json(combine(parts)).dump() << '\n';
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"knot diagram invariants, doubles and t_nu bounds"};
    app.name("knot");
    app.require_subcommand(1);
    app.fallthrough(); // lets --engine appear after the subcommand

    std::string engine_flag;
    app.add_option("--engine", engine_flag, "bracket engine: naive|tl|auto (env KNOT_ENGINE)");

    auto* inv = app.add_subcommand("invariants", "report diagram invariants");
    InputOpts inv_in;
    add_input_options(inv, inv_in);
    bool inv_json = false, inv_csv = false;
    inv->add_flag("--json", inv_json, "emit JSON (default)");
    inv->add_flag("--csv", inv_csv, "emit CSV");

    auto* fam = app.add_subcommand("family", "table for the twist-knot family k3, k5, ...");
    int fam_max = 0;
    fam->add_option("--max-n", fam_max, "largest family index n")->required();

    auto* dbl = app.add_subcommand("double", "k-twisted positive Whitehead double");
    InputOpts dbl_in;
    add_input_options(dbl, dbl_in);
    int dbl_twists = 0, dbl_splice = 0;
    dbl->add_option("--twists", dbl_twists, "twist parameter k")->required();
    dbl->add_option("--splice-arc", dbl_splice, "companion arc carrying the clasp gadget");

    auto* blw = app.add_subcommand("blowup", "insert a +1/-1 full twist on marked strands");
    InputOpts blw_in;
    add_input_options(blw, blw_in);
    std::string blw_site;
    int blw_sign = +1;
    blw->add_option("--site", blw_site, "strand arcs in fiducial order, e.g. \"4,-2\"")->required();
    blw->add_option("--sign", blw_sign, "twist handedness: +1 or -1");

    auto* lem = app.add_subcommand("verify-lemma",
                                   "check the blow-up/crossing-change identity on doubles");
    InputOpts lem_in;
    add_input_options(lem, lem_in);
    int lem_crossing = 0, lem_k = 0;
    lem->add_option("--crossing", lem_crossing, "positive crossing index of the companion")
        ->required();
    lem->add_option("--k", lem_k, "twist parameter k")->required();

    auto* bnd = app.add_subcommand("bounds", "integer interval for t_nu with provenance");
    InputOpts bnd_in;
    add_input_options(bnd, bnd_in);
    std::string bnd_slicing;
    std::optional<int> bnd_tb, bnd_tbm;
    bnd->add_option("--slicing", bnd_slicing, "slicing recipes \"p,n;p,n\"");
    int bnd_tb_raw = 0, bnd_tbm_raw = 0;
    auto* tb_opt = bnd->add_option("--tb", bnd_tb_raw, "TB(K), if supplied directly");
    auto* tbm_opt = bnd->add_option("--tb-mirror", bnd_tbm_raw, "TB(-K), if supplied directly");

    std::vector<std::string> argv = args;
    std::vector<char*> argv_c;
    std::string prog = "knot";
    argv_c.push_back(prog.data());
    for (std::string& s : argv)
        argv_c.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv_c.size()), argv_c.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        Engine engine = pick_engine(engine_flag);
        if (inv->parsed())
            return cmd_invariants(inv_in, inv_csv && !inv_json, engine, out, err);
        if (fam->parsed())
            return cmd_family(fam_max, out);
        if (dbl->parsed())
            return cmd_double(dbl_in, dbl_twists, dbl_splice, out);
        if (blw->parsed())
            return cmd_blowup(blw_in, blw_site, blw_sign, out);
        if (lem->parsed())
            return cmd_verify_lemma(lem_in, lem_crossing, lem_k, engine, out);
        if (bnd->parsed()) {
            if (tb_opt->count())
                bnd_tb = bnd_tb_raw;
            if (tbm_opt->count())
                bnd_tbm = bnd_tbm_raw;
            bool have_input = !bnd_in.pd.empty() || bnd_in.pd_set || !bnd_in.dt.empty() ||
                              !bnd_in.name.empty() || !bnd_in.file.empty();
            return cmd_bounds(bnd_in, have_input, bnd_slicing, bnd_tb, bnd_tbm, engine, out);
        }
    } catch (const knot_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return 0;
}

} // namespace knot
