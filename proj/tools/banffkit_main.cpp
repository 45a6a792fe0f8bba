// banffkit command-line tool: construction, search, verification and report
// generation for difference families, designs and harmonious colorings.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "banffkit/bounds.hpp"
#include "banffkit/constructions.hpp"
#include "banffkit/json_io.hpp"

using namespace banffkit;
using io::json;

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes
constexpr int kOk = 0;        // verified / found
constexpr int kRefuted = 1;   // refuted / nothing found
constexpr int kUsage = 2;     // usage or input error
constexpr int kBudget = 3;    // search budget exhausted

struct Common {
    std::string format = "json";
    std::string budget;
    unsigned jobs = 1;
    std::optional<std::uint64_t> seed;
    std::string out;
};

SearchBudget parse_budget(const std::string& s) {
    SearchBudget b;
    if (s.empty()) return b;
    try {
        std::size_t pos = 0;
        if (s.back() == 's') {
            b.max_seconds = std::stod(s.substr(0, s.size() - 1), &pos);
            if (pos != s.size() - 1 || b.max_seconds <= 0) throw std::exception();
        } else {
            std::string core = s.back() == 'n' ? s.substr(0, s.size() - 1) : s;
            b.max_nodes = std::stoull(core, &pos);
            if (pos != core.size() || b.max_nodes == 0) throw std::exception();
        }
    } catch (...) {
        throw io::parse_error("--budget: expected e.g. '600s' or '1000000n', got '" + s + "'");
    }
    return b;
}

std::vector<std::uint64_t> split_uints(const std::string& s, char delim) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, delim)) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        std::uint64_t x = std::stoull(item, &pos);
        if (pos != item.size())
            throw io::parse_error("expected a comma-separated integer list, got '" + s + "'");
        out.push_back(x);
    }
    return out;
}

// Plain text rendering of a JSON document: nested key/value lines, scalar
// arrays inline.
void render_text(const json& j, std::ostream& os, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object() || (it->is_array() && !it->empty() &&
                                    (it->front().is_object() || it->front().is_array()))) {
                os << pad << it.key() << ":\n";
                render_text(*it, os, indent + 2);
            } else {
                os << pad << it.key() << ": " << it->dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() || e.is_array()) {
                os << pad << "-\n";
                render_text(e, os, indent + 2);
            } else {
                os << pad << "- " << e.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const json& j, const Common& c) {
    if (c.format == "json") {
        io::dump_output(j, c.out);
        return;
    }
    std::ostringstream os;
    render_text(j, os, 0);
    if (c.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(c.out);
        if (!f) throw io::parse_error(c.out + ": cannot open for writing");
        f << os.str();
    }
}

json certificate(const std::string& op, const std::string& verdict, json input,
                 json witness, bool deterministic) {
    json c;
    c["tool"] = "banffkit";
    c["version"] = kVersion;
    c["operation"] = op;
    c["deterministic"] = deterministic;
    c["verdict"] = verdict;
    c["input"] = std::move(input);
    if (!witness.is_null()) c["witness"] = std::move(witness);
    return c;
}

// Group construction from flags or a JSON file.
struct GroupFlags {
    std::string file;
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    unsigned n = 1;
    std::string modulus;

    GroupPtr build() const {
        if (!file.empty()) return make_group(io::group_from_json(io::load_file(file)));
        if (p) {
            std::vector<std::uint32_t> mod;
            for (auto c : split_uints(modulus, ','))
                mod.push_back(static_cast<std::uint32_t>(c));
            return make_group(GroupSpec::make_field(p, n, mod));
        }
        if (q) return make_group(GroupSpec::field_of_order(q));
        throw io::parse_error("specify a group: FILE, --q, or --p/--n/--modulus");
    }
};

void add_group_flags(CLI::App* cmd, GroupFlags& gf) {
    cmd->add_option("file", gf.file, "group spec JSON file");
    cmd->add_option("--q", gf.q, "field order (prime power, default modulus)");
    cmd->add_option("--p", gf.p, "field characteristic");
    cmd->add_option("--n", gf.n, "extension degree");
    cmd->add_option("--modulus", gf.modulus, "modulus coefficients c0,c1,...,cn");
}

// ---------------------------------------------------------------- tables ---

struct Table1Row {
    std::uint64_t q;
    std::vector<Elem> set;   // explicit witness when no power form exists
    Elem x;                  // power-form witness {1,x,x^2,x^3} when set empty
};

const std::vector<Table1Row> kTable1 = {
    {13, {1, 2, 4, 10}, 0}, {37, {}, 13},  {61, {1, 7, 11, 12}, 0},
    {73, {}, 29},           {97, {}, 41},  {109, {1, 2, 11, 13}, 0},
    {157, {}, 6},           {181, {1, 2, 13, 19}, 0},
    {193, {}, 70},          {229, {}, 18}, {241, {}, 66},
    {277, {}, 72},          {313, {}, 10}, {337, {}, 65},
    {349, {}, 18},          {373, {}, 32}, {397, {}, 13},
    {409, {}, 33},
};

struct Table2Row {
    std::uint64_t q;
    std::vector<std::uint32_t> modulus;  // low-to-high
    std::uint64_t exponent;              // x = z^exponent
};

const std::vector<Table2Row> kTable2 = {
    {25, {2, 1, 1}, 7},   {49, {3, 1, 1}, 11},  {121, {7, 1, 1}, 17},
    {169, {2, 1, 1}, 23}, {289, {3, 1, 1}, 91}, {361, {2, 1, 1}, 11},
    {529, {7, 1, 1}, 83}, {841, {3, 1, 1}, 71}, {961, {3, 2, 1}, 49},
};

Block power_block(const GroupPtr& field, Elem x, std::uint32_t k) {
    Block b;
    for (std::uint32_t i = 0; i < k; ++i) b.push_back(field->pow(x, i));
    return b;
}

// --------------------------------------------------------------- certify ---

int run_certify(const json& cert, const Common& common) {
    if (!cert.is_object() || !cert.contains("operation"))
        throw io::parse_error("certificate: missing operation");
    const std::string op = cert.at("operation").get<std::string>();
    const std::string verdict = cert.value("verdict", std::string("verified"));
    bool reproduced = false;

    if (op == "df verify" || op == "construct radical" || op == "construct fpf" ||
        op == "construct wilson" || op == "df banff-check" ||
        op == "df translate" || op == "construct plane-banff") {
        const json& src = cert.contains("witness") ? cert.at("witness") : cert.at("input");
        auto f = io::df_from_json(src);
        bool ok = op == "df verify" ? verify_df(f).ok : is_banff_df(f).ok;
        reproduced = ok == (verdict == "verified" || verdict == "found");
    } else if (op == "design verify" || op == "design cyclic" || op == "design singer") {
        const json& src = cert.contains("witness") ? cert.at("witness") : cert.at("input");
        bool ok = verify_2design(io::design_from_json(src)).ok;
        reproduced = ok == (verdict == "verified" || verdict == "found");
    } else if (op == "levi verify-coloring" || op == "levi canonical" ||
               op == "levi chromatic") {
        auto d = io::design_from_json(cert.at("input"));
        auto c = io::coloring_from_json(cert.at("witness"));
        auto rep = verify_harmonious(LeviGraph{d.points, d.blocks}, c);
        reproduced = rep.ok == (verdict == "verified" || verdict == "found");
    } else if (op == "search nesting") {
        auto n = io::nesting_from_json(cert.at("witness"));
        reproduced = verify_nesting(n).ok == (verdict == "found");
    } else if (op == "search banff-set") {
        auto f = make_group(io::group_from_json(cert.at("input").at("group")));
        auto k = cert.at("input").at("k").get<std::uint32_t>();
        auto b = io::block_from_json(f, cert.at("witness"));
        reproduced = banff_set_check(f, k, b).ok == (verdict == "found");
    } else if (op == "search translates") {
        auto f = io::df_from_json(cert.at("input"));
        std::vector<Elem> ts;
        for (const auto& t : cert.at("witness")) ts.push_back(t.get<Elem>());
        reproduced = is_banff_df(translate(f, ts)).ok == (verdict == "found");
    } else {
        throw io::parse_error("certificate: unsupported operation '" + op + "'");
    }

    emit(json{{"operation", op},
              {"claimed_verdict", verdict},
              {"reproduced", reproduced}},
         common);
    return reproduced ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"banffkit: difference families, designs and harmonious colorings"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", common.budget,
                   "search budget: '<sec>s' wall clock or '<N>[n]' nodes");
    app.add_option("--jobs", common.jobs, "parallel workers for searches")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", common.seed,
                   "opt-in randomized restart seed (searches only)");
    app.add_option("--out", common.out, "write output to a file instead of stdout");

    int rc = kOk;
    auto sub = [&](CLI::App* parent, const char* name, const char* desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // ------------------------------------------------------------- field ---
    auto* field = sub(&app, "field", "finite field inspection");
    field->require_subcommand(1);
    {
        auto* info = sub(field, "info", "describe a group or field");
        auto gf = std::make_shared<GroupFlags>();
        add_group_flags(info, *gf);
        info->callback([&, gf] {
            auto g = gf->build();
            json out{{"group", io::group_to_json(g->spec())},
                     {"order", g->order()},
                     {"description", g->describe()}};
            if (g->is_field()) {
                out["characteristic"] = g->characteristic();
                out["degree"] = g->degree();
                out["primitive"] = io::elem_to_json(g, g->primitive());
            }
            emit(out, common);
        });

        auto* cosets = sub(field, "cosets", "cyclotomic classes C^e_i");
        auto gf2 = std::make_shared<GroupFlags>();
        auto e = std::make_shared<std::uint64_t>(0);
        add_group_flags(cosets, *gf2);
        cosets->add_option("--e", *e, "subgroup index e | q-1")->required();
        cosets->callback([&, gf2, e] {
            auto g = gf2->build();
            auto table = cyclotomic_classes(g, *e);
            json classes = json::array();
            for (const auto& cls : table.classes)
                classes.push_back(io::block_to_json(g, cls));
            json out{{"q", g->order()},
                     {"e", *e},
                     {"primitive", io::elem_to_json(g, table.primitive)},
                     {"classes", classes}};
            if ((g->order() - 1) % (2 * *e) == 0 &&
                g->log(g->neg(g->one())) % *e == 0) {
                auto half = half_representatives(table);
                out["half_representatives"] = io::block_to_json(g, half);
            }
            emit(out, common);
        });
    }

    // ---------------------------------------------------------------- df ---
    auto* df = sub(&app, "df", "difference family operations");
    df->require_subcommand(1);
    {
        auto* verify = sub(df, "verify", "verify a (v,k,lambda) difference family");
        auto file = std::make_shared<std::string>();
        verify->add_option("file", *file, "family JSON")->required();
        verify->callback([&, file] {
            json in = io::load_file(*file);
            auto f = io::df_from_json(in);
            auto rep = verify_df(f);
            json out = certificate("df verify", rep.ok ? "verified" : "refuted",
                                   in, nullptr, true);
            out["k"] = rep.k;
            out["lambda"] = rep.lambda;
            out["violations"] = rep.violations;
            emit(out, common);
            rc = rep.ok ? kOk : kRefuted;
        });

        auto* bc = sub(df, "banff-check", "check the Banff property");
        auto file2 = std::make_shared<std::string>();
        bc->add_option("file", *file2, "family JSON")->required();
        bc->callback([&, file2] {
            json in = io::load_file(*file2);
            auto f = io::df_from_json(in);
            auto rep = is_banff_df(f);
            json out = certificate("df banff-check", rep.ok ? "verified" : "refuted",
                                   in, nullptr, true);
            out["violations"] = rep.violations;
            emit(out, common);
            rc = rep.ok ? kOk : kRefuted;
        });

        auto* dev = sub(df, "develop", "develop a family into a design");
        auto file3 = std::make_shared<std::string>();
        auto force = std::make_shared<bool>(false);
        dev->add_option("file", *file3, "family JSON")->required();
        dev->add_flag("--force", *force, "develop even if verification fails");
        dev->callback([&, file3, force] {
            auto f = io::df_from_json(io::load_file(*file3));
            auto d = develop(f, *force);
            auto rep = verify_2design(d);
            json out = io::design_to_json(d);
            out["verified"] = rep.ok;
            out["v"] = rep.v;
            out["k"] = rep.k;
            out["lambda"] = rep.lambda;
            out["b"] = rep.b;
            out["r"] = rep.r;
            emit(out, common);
            rc = rep.ok ? kOk : kRefuted;
        });

        auto* tr = sub(df, "translate", "translate each block by an offset");
        auto file4 = std::make_shared<std::string>();
        auto ts = std::make_shared<std::string>();
        tr->add_option("file", *file4, "family JSON")->required();
        tr->add_option("--ts", *ts, "comma-separated element indices t1,..,tn")
            ->required();
        tr->callback([&, file4, ts] {
            auto f = io::df_from_json(io::load_file(*file4));
            std::vector<Elem> offsets;
            for (auto t : split_uints(*ts, ','))
                offsets.push_back(static_cast<Elem>(t));
            auto g = translate(f, offsets);
            json out = io::df_to_json(g);
            out["banff"] = is_banff_df(g).ok;
            emit(out, common);
        });
    }

    // ------------------------------------------------------------ design ---
    auto* design = sub(&app, "design", "2-design operations");
    design->require_subcommand(1);
    {
        auto* verify = sub(design, "verify", "verify a 2-(v,k,lambda) design");
        auto file = std::make_shared<std::string>();
        verify->add_option("file", *file, "design JSON")->required();
        verify->callback([&, file] {
            json in = io::load_file(*file);
            auto rep = verify_2design(io::design_from_json(in));
            json out = certificate("design verify", rep.ok ? "verified" : "refuted",
                                   in, nullptr, true);
            out["v"] = rep.v;
            out["k"] = rep.k;
            out["lambda"] = rep.lambda;
            out["b"] = rep.b;
            out["r"] = rep.r;
            out["violations"] = rep.violations;
            emit(out, common);
            rc = rep.ok ? kOk : kRefuted;
        });

        auto* singer = sub(design, "singer", "Singer (q^2+q+1, q+1, 1) difference set");
        auto q = std::make_shared<std::uint64_t>(0);
        singer->add_option("--q", *q, "prime power")->required();
        singer->callback([&, q] {
            Block b = singer_difference_set(*q);
            std::uint64_t v = *q * *q + *q + 1;
            json out{{"q", *q}, {"v", v}, {"set", b}};
            emit(out, common);
        });

        auto* cyclic = sub(design, "cyclic", "develop base blocks over Z_v");
        auto v = std::make_shared<std::uint64_t>(0);
        auto base = std::make_shared<std::string>();
        cyclic->add_option("--v", *v, "group order")->required();
        cyclic->add_option("--base", *base, "base blocks 'a,b,c;d,e,f'")->required();
        cyclic->callback([&, v, base] {
            std::vector<Block> bases;
            std::stringstream ss(*base);
            std::string blk;
            while (std::getline(ss, blk, ';')) {
                Block b;
                for (auto x : split_uints(blk, ','))
                    b.push_back(static_cast<Elem>(x));
                bases.push_back(normalize_block(std::move(b)));
            }
            auto d = cyclic_design(*v, bases);
            auto rep = verify_2design(d);
            json out = io::design_to_json(d);
            out["verified"] = rep.ok;
            out["v"] = rep.v;
            out["k"] = rep.k;
            out["lambda"] = rep.lambda;
            emit(out, common);
            rc = rep.ok ? kOk : kRefuted;
        });
    }

    // -------------------------------------------------------------- levi ---
    auto* levi = sub(&app, "levi", "Levi graph and harmonious colorings");
    levi->require_subcommand(1);
    {
        auto* build = sub(levi, "build", "incidence graph summary of a design");
        auto dfile = std::make_shared<std::string>();
        build->add_option("--design", *dfile, "design JSON")->required();
        build->callback([&, dfile] {
            auto d = io::design_from_json(io::load_file(*dfile));
            auto g = build_levi(d);
            emit(json{{"points", g.points},
                      {"blocks", g.blocks.size()},
                      {"vertices", g.points + g.blocks.size()},
                      {"edges", g.edges()}},
                 common);
        });

        auto* vc = sub(levi, "verify-coloring", "check a harmonious coloring");
        auto dfile2 = std::make_shared<std::string>();
        auto cfile = std::make_shared<std::string>();
        vc->add_option("--design", *dfile2, "design JSON")->required();
        vc->add_option("--coloring", *cfile, "coloring JSON")->required();
        vc->callback([&, dfile2, cfile] {
            json din = io::load_file(*dfile2);
            auto d = io::design_from_json(din);
            auto c = io::coloring_from_json(io::load_file(*cfile));
            LeviGraph g{d.points, d.blocks};
            auto rep = verify_harmonious(g, c);
            json out = certificate("levi verify-coloring",
                                   rep.ok ? "verified" : "refuted", din,
                                   io::coloring_to_json(c), true);
            out["colors_used"] = rep.colors_used;
            out["proper_violations"] = rep.proper_violations;
            out["pair_violations"] = rep.pair_violations;
            if (rep.ok) out["exact"] = is_exact(g, c);
            emit(out, common);
            rc = rep.ok ? kOk : kRefuted;
        });

        auto* canon = sub(levi, "canonical", "canonical coloring of a Banff family");
        auto ffile = std::make_shared<std::string>();
        canon->add_option("file", *ffile, "family JSON")->required();
        canon->callback([&, ffile] {
            json in = io::load_file(*ffile);
            auto f = io::df_from_json(in);
            auto c = canonical_banff_coloring(f);
            auto d = develop(f);
            LeviGraph g{d.points, d.blocks};
            auto rep = verify_harmonious(g, c);
            json out = certificate("levi canonical",
                                   rep.ok ? "verified" : "refuted", in,
                                   io::coloring_to_json(c), true);
            out["colors_used"] = rep.colors_used;
            if (rep.ok) out["exact"] = is_exact(g, c);
            emit(out, common);
            rc = rep.ok ? kOk : kRefuted;
        });

        auto* chrom = sub(levi, "chromatic", "exact harmonious chromatic number");
        auto dfile3 = std::make_shared<std::string>();
        auto hmax = std::make_shared<std::uint32_t>(0);
        chrom->add_option("--design", *dfile3, "design JSON")->required();
        chrom->add_option("--max", *hmax, "largest palette size to try")->required();
        chrom->callback([&, dfile3, hmax] {
            json din = io::load_file(*dfile3);
            auto d = io::design_from_json(din);
            auto g = build_levi(d);
            auto res = harmonious_number_search(g, *hmax, parse_budget(common.budget));
            std::string verdict = res.exact ? "found"
                                : res.budget_exhausted ? "budget-exhausted"
                                                       : "refuted";
            json out = certificate("levi chromatic", verdict, din,
                                   res.witness ? io::coloring_to_json(*res.witness)
                                               : json(nullptr),
                                   true);
            out["lower"] = res.lower;
            out["upper"] = res.exact ? json(res.h) : json(nullptr);
            out["h"] = res.exact ? json(res.h) : json(nullptr);
            out["nodes"] = res.nodes;
            emit(out, common);
            rc = res.exact ? kOk : res.budget_exhausted ? kBudget : kRefuted;
        });
    }

    // ------------------------------------------------------------ search ---
    auto* search = sub(&app, "search", "backtracking searches");
    search->require_subcommand(1);
    {
        auto* bs = sub(search, "banff-set", "find a (q,k,1) Banff set");
        auto gf = std::make_shared<GroupFlags>();
        auto k = std::make_shared<std::uint32_t>(4);
        auto mode = std::make_shared<std::string>("power");
        add_group_flags(bs, *gf);
        bs->add_option("--k", *k, "block size")->required();
        bs->add_option("--mode", *mode, "search strategy")
            ->check(CLI::IsMember({"power", "iterative", "exhaustive"}));
        bs->callback([&, gf, k, mode] {
            auto g = gf->build();
            BanffSetMode m = *mode == "power"       ? BanffSetMode::Power
                             : *mode == "iterative" ? BanffSetMode::Iterative
                                                    : BanffSetMode::Exhaustive;
            auto b = search_banff_set(g, *k, m, common.jobs);
            json input{{"group", io::group_to_json(g->spec())}, {"k", *k},
                       {"mode", *mode}};
            if (!b) {
                emit(certificate("search banff-set", "none", input, nullptr,
                                 common.jobs <= 1),
                     common);
                rc = kRefuted;
                return;
            }
            auto rep = banff_set_check(g, *k, normalize_block(*b));
            json out = certificate("search banff-set", "found", input,
                                   io::block_to_json(g, normalize_block(*b)),
                                   common.jobs <= 1);
            out["report"] = io::banff_set_report_to_json(rep, g);
            emit(out, common);
            rc = kOk;
        });

        auto* tr = sub(search, "translates", "find a Banff translate tuple");
        auto file = std::make_shared<std::string>();
        tr->add_option("file", *file, "family JSON")->required();
        tr->callback([&, file] {
            json in = io::load_file(*file);
            auto f = io::df_from_json(in);
            // Randomized restart: permute block order, search, map back.
            std::vector<std::size_t> perm(f.blocks.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            if (common.seed) {
                std::mt19937_64 rng(*common.seed);
                std::shuffle(perm.begin(), perm.end(), rng);
            }
            DifferenceFamily shuffled = f;
            for (std::size_t i = 0; i < perm.size(); ++i)
                shuffled.blocks[i] = f.blocks[perm[i]];
            auto ts = search_translates(shuffled, parse_budget(common.budget));
            if (!ts) {
                emit(certificate("search translates", "none", in, nullptr,
                                 !common.seed),
                     common);
                rc = kRefuted;
                return;
            }
            std::vector<Elem> mapped(ts->size());
            for (std::size_t i = 0; i < perm.size(); ++i) mapped[perm[i]] = (*ts)[i];
            json out = certificate("search translates", "found", in, json(mapped),
                                   !common.seed);
            out["banff"] = is_banff_df(translate(f, mapped)).ok;
            emit(out, common);
            rc = kOk;
        });

        auto* nest = sub(search, "nesting", "nest a (v,3,1) design into a (v,4,2)");
        auto file2 = std::make_shared<std::string>();
        nest->add_option("file", *file2, "design JSON")->required();
        nest->callback([&, file2] {
            json in = io::load_file(*file2);
            auto d = io::design_from_json(in);
            auto n = search_nesting(d, parse_budget(common.budget));
            if (!n) {
                emit(certificate("search nesting", "none", in, nullptr, true),
                     common);
                rc = kRefuted;
                return;
            }
            json out = certificate("search nesting", "found", in,
                                   io::nesting_to_json(*n), true);
            emit(out, common);
            rc = kOk;
        });
    }

    // --------------------------------------------------------- construct ---
    auto* construct = sub(&app, "construct", "direct constructions");
    construct->require_subcommand(1);
    {
        auto* pb = sub(construct, "plane-banff", "Banff difference set of PG(2,q)");
        auto q = std::make_shared<std::uint64_t>(0);
        pb->add_option("--q", *q, "prime power")->required();
        pb->callback([&, q] {
            Block b = plane_banff_difference_set(*q);
            std::uint64_t v = *q * *q + *q + 1;
            DifferenceFamily f;
            f.group = make_group(GroupSpec::cyclic(v));
            f.blocks = {b};
            f.lambda = 1;
            json out = io::df_to_json(f);
            out["banff"] = is_banff_df(f).ok;
            out["operation"] = "construct plane-banff";
            emit(out, common);
            rc = is_banff_df(f).ok ? kOk : kRefuted;
        });

        auto* rad = sub(construct, "radical", "radical (q,k,1) difference family");
        auto gf = std::make_shared<GroupFlags>();
        auto k = std::make_shared<std::uint32_t>(0);
        add_group_flags(rad, *gf);
        rad->add_option("--k", *k, "block size (odd)")->required();
        rad->callback([&, gf, k] {
            auto g = gf->build();
            auto f = radical_df(g, *k);
            if (!f) {
                emit(json{{"operation", "construct radical"}, {"verdict", "none"}},
                     common);
                rc = kRefuted;
                return;
            }
            json out = io::df_to_json(*f);
            out["banff"] = is_banff_df(*f).ok;
            out["operation"] = "construct radical";
            emit(out, common);
            rc = kOk;
        });

        auto* fpf = sub(construct, "fpf", "family from a fixed-point-free action");
        auto v = std::make_shared<std::uint64_t>(0);
        auto k2 = std::make_shared<std::uint32_t>(0);
        fpf->add_option("--v", *v, "group order")->required();
        fpf->add_option("--k", *k2, "block size (odd)")->required();
        fpf->callback([&, v, k2] {
            auto f = fpf_banff_df(*v, *k2);
            json out = io::df_to_json(f);
            out["banff"] = is_banff_df(f).ok;
            out["operation"] = "construct fpf";
            emit(out, common);
            rc = kOk;
        });

        auto* wil = sub(construct, "wilson", "expand a Banff set into a family");
        auto gf2 = std::make_shared<GroupFlags>();
        auto k3 = std::make_shared<std::uint32_t>(0);
        auto set = std::make_shared<std::string>();
        add_group_flags(wil, *gf2);
        wil->add_option("--k", *k3, "block size")->required();
        wil->add_option("--set", *set, "Banff set as element indices a,b,c,d")
            ->required();
        wil->callback([&, gf2, k3, set] {
            auto g = gf2->build();
            Block b;
            for (auto x : split_uints(*set, ','))
                b.push_back(static_cast<Elem>(x));
            auto f = wilson_expand(g, *k3, normalize_block(std::move(b)));
            json out = io::df_to_json(f);
            out["banff"] = is_banff_df(f).ok;
            out["operation"] = "construct wilson";
            emit(out, common);
            rc = kOk;
        });
    }

    // ------------------------------------------------------------ bounds ---
    {
        auto* bounds = sub(&app, "bounds", "harmonious chromatic lower bounds");
        auto v = std::make_shared<std::uint64_t>(0);
        auto k = std::make_shared<std::uint64_t>(0);
        auto lambda = std::make_shared<std::uint64_t>(1);
        auto dfile = std::make_shared<std::string>();
        bounds->add_option("--v", *v, "point count");
        bounds->add_option("--k", *k, "block size");
        bounds->add_option("--lambda", *lambda, "pair multiplicity");
        bounds->add_option("--design", *dfile, "design JSON (alternative input)");
        bounds->callback([&, v, k, lambda, dfile] {
            BoundReport rep = dfile->empty()
                                  ? bound_report(*v, *k, *lambda)
                                  : bound_report(io::design_from_json(
                                        io::load_file(*dfile)));
            emit(io::bound_report_to_json(rep), common);
        });
    }

    // ------------------------------------------------------------ report ---
    auto* report = sub(&app, "report", "reference tables and certification");
    report->require_subcommand(1);
    {
        auto* t1 = sub(report, "table1", "Banff sets in prime fields, k=4");
        auto maxq = std::make_shared<std::uint64_t>(409);
        t1->add_option("--max", *maxq, "largest prime to include");
        t1->callback([&, maxq] {
            json rows = json::array();
            bool all_ok = true;
            for (std::uint64_t q = 13; q <= *maxq; q += 12) {
                if (!is_prime(q)) continue;
                auto g = make_group(GroupSpec::field_of_order(q));
                json row{{"q", q}};
                auto found = search_banff_set(g, 4, BanffSetMode::Power, common.jobs);
                std::string mode = "power";
                if (!found) {
                    found = search_banff_set(g, 4, BanffSetMode::Exhaustive);
                    mode = "exhaustive";
                }
                row["mode"] = mode;
                row["found"] = found ? json(normalize_block(*found)) : json(nullptr);
                all_ok = all_ok && found.has_value();
                for (const auto& ref : kTable1)
                    if (ref.q == q) {
                        Block w = ref.set.empty()
                                      ? normalize_block(power_block(g, ref.x, 4))
                                      : ref.set;
                        row["reference"] = w;
                        bool ok = banff_set_check(g, 4, w).ok;
                        row["reference_ok"] = ok;
                        all_ok = all_ok && ok;
                    }
                rows.push_back(std::move(row));
            }
            emit(json{{"table", "banff-sets-prime-k4"},
                      {"max", *maxq},
                      {"rows", rows},
                      {"all_ok", all_ok}},
                 common);
            rc = all_ok ? kOk : kRefuted;
        });

        auto* t2 = sub(report, "table2", "Banff sets in prime-square fields, k=4");
        t2->callback([&] {
            json rows = json::array();
            bool all_ok = true;
            for (const auto& ref : kTable2) {
                std::uint64_t p, pp = ref.q;
                unsigned n;
                prime_power(pp, p, n);
                auto g = make_group(GroupSpec::make_field(
                    static_cast<std::uint32_t>(p), n, ref.modulus));
                Elem z = g->from_coeffs({0, 1});
                Elem x = g->pow(z, ref.exponent);
                Block w = normalize_block(power_block(g, x, 4));
                bool ok = banff_set_check(g, 4, w).ok;
                all_ok = all_ok && ok;
                json row{{"q", ref.q},
                         {"modulus", ref.modulus},
                         {"x", io::elem_to_json(g, x)},
                         {"reference", io::block_to_json(g, w)},
                         {"reference_ok", ok}};
                auto found = search_banff_set(g, 4, BanffSetMode::Power, common.jobs);
                row["found"] = found ? io::block_to_json(g, normalize_block(*found))
                                     : json(nullptr);
                all_ok = all_ok && found.has_value();
                rows.push_back(std::move(row));
            }
            emit(json{{"table", "banff-sets-prime-square-k4"},
                      {"rows", rows},
                      {"all_ok", all_ok}},
                 common);
            rc = all_ok ? kOk : kRefuted;
        });

        auto* cert = sub(report, "certify", "re-verify an emitted certificate");
        auto file = std::make_shared<std::string>();
        cert->add_option("file", *file, "certificate JSON")->required();
        cert->callback([&, file] { rc = run_certify(io::load_file(*file), common); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const budget_exhausted_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const io::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return rc;
}
