#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cache.hpp"
#include "io.hpp"
#include "tautilt/error.hpp"

#ifndef TAUTILT_VERSION
#define TAUTILT_VERSION "0"
#endif

namespace tautilt::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 0;
    std::string cache_dir = ".tautilt-cache";
    bool no_cache = false;
    bool verbose = false;
    std::size_t count_cap = kDefaultCountCap;
    std::size_t dim_cap = kDefaultDimCap;
    std::size_t vertex_cap = kDefaultVertexCap;
    std::string format = "text";

    std::string algebra;
    std::vector<std::string> modules;
    std::string from;
    std::string to;
    std::vector<std::string> kill;
    std::string at;
    bool inverse = false;
    bool tilting = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Context {
public:
    Context(const Options& opt, std::ostream& err)
        : opt_(opt), err_(err), cache_(opt.cache_dir, !opt.no_cache, err) {
        algebra_ = load_algebra(read_file(opt.algebra));
    }

    [[nodiscard]] const AlgebraPtr& algebra() const { return algebra_; }
    [[nodiscard]] const Options& options() const { return opt_; }

    const ARIndex& index() { return index_for(algebra_, index_); }
    const ARIndex& op_index() { return index_for(opposite_of(algebra_), op_index_); }

    /// Index if the algebra enumerates within caps, else nullptr.
    const ARIndex* try_index() {
        try {
            return &index();
        } catch (const DomainError&) {
            return nullptr;
        }
    }

    int vertex(const std::string& label) const {
        const auto& labels = algebra_->source().vertex_labels;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            if (std::to_string(labels[v]) == label) return static_cast<int>(v);
        }
        throw UsageError("unknown vertex " + label);
    }

    Representation resolve(const std::string& selector) {
        std::vector<Representation> parts;
        std::stringstream ss(selector);
        std::string token;
        while (std::getline(ss, token, '+')) {
            if (token.empty()) throw UsageError("empty summand in module selector " + selector);
            if (token == "0") continue;
            parts.push_back(resolve_one(token));
        }
        if (parts.empty()) return Representation::zero(algebra_);
        if (parts.size() == 1) return parts.front();
        return direct_sum_module(parts);
    }

    Representation modules() {
        if (opt_.modules.empty()) throw UsageError("this command needs --module");
        std::vector<Representation> parts;
        for (const auto& s : opt_.modules) {
            Representation m = resolve(s);
            if (!m.is_zero()) parts.push_back(std::move(m));
        }
        if (parts.empty()) return Representation::zero(algebra_);
        return parts.size() == 1 ? parts.front() : direct_sum_module(parts);
    }

    std::string describe(const Representation& m) {
        if (m.is_zero()) return "0";
        const ARIndex* ix = m.algebra() == algebra_ ? try_index() : nullptr;
        std::string s;
        if (ix) {
            for (std::size_t k : ix->locate(m)) s += (s.empty() ? "" : "+") + ix->label(k);
            return s;
        }
        for (const auto& part : decompose(m, opt_.seed).parts) s += (s.empty() ? "" : "+") + part.module.label();
        return s;
    }

private:
    Representation resolve_one(const std::string& token) {
        if (token.size() > 5 && token.ends_with(".json")) {
            try {
                return representation_from_json(algebra_, json::parse(read_file(token)));
            } catch (const json::exception& e) {
                throw ParseError("cli", token + ": " + e.what(), 0, 0);
            }
        }
        if (token.size() > 3 && token[1] == '(' && token.back() == ')') {
            const int v = vertex(token.substr(2, token.size() - 3));
            switch (token[0]) {
                case 'P': return projective(algebra_, v);
                case 'I': return injective(algebra_, v);
                case 'S': return simple(algebra_, v);
                default: break;
            }
            throw UsageError("unknown constructor " + token);
        }
        // dim vector with ' suffixes or a 1-based #k
        std::string base = token;
        std::optional<std::size_t> pick;
        if (const auto hash = token.find('#'); hash != std::string::npos) {
            base = token.substr(0, hash);
            try {
                const long long k = std::stoll(token.substr(hash + 1));
                if (k < 1) throw UsageError("disambiguation index starts at 1: " + token);
                pick = static_cast<std::size_t>(k - 1);
            } catch (const std::logic_error&) {
                throw UsageError("bad disambiguation index in " + token);
            }
        } else if (const auto prime = token.find('\''); prime != std::string::npos) {
            base = token.substr(0, prime);
            if (token.find_first_not_of('\'', prime) != std::string::npos) throw UsageError("bad module selector " + token);
            pick = token.size() - prime;
        }
        const ARIndex& ix = index();
        std::vector<std::size_t> matches;
        for (std::size_t k = 0; k < ix.size(); ++k) {
            if (ix.module(k).label() == base) matches.push_back(k);
        }
        if (matches.empty()) throw UsageError("no indecomposable with dimension vector " + base);
        if (!pick) {
            if (matches.size() > 1) {
                throw UsageError("ambiguous module selector " + token + ": " + std::to_string(matches.size()) +
                                 " indecomposables share it; write " + base + "' or " + base + "#2");
            }
            pick = 0;
        }
        if (*pick >= matches.size()) throw UsageError("only " + std::to_string(matches.size()) + " indecomposables have dimension vector " + base);
        return ix.module(matches[*pick]);
    }

    const ARIndex& index_for(const AlgebraPtr& a, std::optional<ARIndex>& slot) {
        if (slot) return *slot;
        const std::string key = a->fingerprint_hex() + "-c" + std::to_string(opt_.count_cap) + "-d" +
                                std::to_string(opt_.dim_cap) + "-s" + std::to_string(opt_.seed) + "-v" + TAUTILT_VERSION;
        auto compute = [&] {
            try {
                return to_json(enumerate_indecomposables(a, opt_.count_cap, opt_.dim_cap, opt_.seed)).dump(1);
            } catch (const DomainError& e) {
                return json{{"error", e.what()}, {"origin", e.origin()}}.dump(1);
            }
        };
        auto valid = [&](const std::string& payload) {
            try {
                const json j = json::parse(payload);
                if (j.contains("error")) return j.at("error").is_string() && j.at("origin").is_string();
                (void)ar_quiver_from_json(a, j);
                return true;
            } catch (const std::exception&) {
                return false;
            }
        };
        const std::string payload = cache_.get_or_compute(key, compute, valid);
        if (opt_.verbose) {
            err_ << "tautilt: cache " << (cache_.last_was_hit() ? "hit " : "miss ") << cache_.path_for(key).string() << "\n";
        }
        const json j = json::parse(payload);
        if (j.contains("error")) throw DomainError(j.at("origin").get<std::string>(), j.at("error").get<std::string>());
        slot.emplace(ar_quiver_from_json(a, j));
        return *slot;
    }

    Options opt_;
    std::ostream& err_;
    Cache cache_;
    AlgebraPtr algebra_;
    std::optional<ARIndex> index_;
    std::optional<ARIndex> op_index_;
};

bool json_out(const Options& o) { return o.format == "json"; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (o.format == f) return;
    }
    throw UsageError("format " + o.format + " is not available for this command");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SupportTauTiltingPair read_pair(Context& ctx) {
    const ARIndex& ix = ctx.index();
    SupportTauTiltingPair p;
    p.summands = ix.summands(ctx.modules());
    for (const auto& v : ctx.options().kill) p.killed.push_back(ctx.vertex(v));
    std::sort(p.killed.begin(), p.killed.end());
    p.killed.erase(std::unique(p.killed.begin(), p.killed.end()), p.killed.end());
    if (!is_valid_pair(ix, p)) throw DomainError("tautilt", pair_label(ix, p) + " is not a support tau-tilting pair");
    return p;
}

json pair_json(const ARIndex& ix, const SupportTauTiltingPair& p) {
    json s = json::array();
    for (std::size_t k : p.summands.members) s.push_back(ix.label(k));
    json k = json::array();
    for (int v : p.killed) k.push_back(ix.algebra()->source().vertex_labels[static_cast<std::size_t>(v)]);
    return {{"label", pair_label(ix, p)}, {"summands", s}, {"killed", k}};
}

// ------------------------------------------------------------ verbs

void cmd_basis(Context& ctx, std::ostream& out) {
    const auto& a = *ctx.algebra();
    if (json_out(ctx.options())) {
        json b = json::array();
        for (const auto& p : a.basis()) b.push_back(a.path_text(p));
        out << json{{"algebra", a.name()}, {"dim", a.dim()}, {"basis", b}}.dump(2) << "\n";
        return;
    }
    out << "dim " << a.dim() << "\n";
    for (const auto& p : a.basis()) out << a.path_text(p) << "\n";
}

void cmd_indecs(Context& ctx, std::ostream& out) {
    const ARIndex& ix = ctx.index();
    if (json_out(ctx.options())) {
        json mods = json::array();
        for (std::size_t k = 0; k < ix.size(); ++k) {
            json m = to_json(ix.module(k));
            m["label"] = ix.label(k);
            m["projective"] = static_cast<bool>(ix.data().projective[k]);
            m["injective"] = static_cast<bool>(ix.data().injective[k]);
            mods.push_back(std::move(m));
        }
        out << json{{"algebra", ix.algebra()->name()}, {"count", ix.size()}, {"indecomposables", mods}}.dump(2) << "\n";
        return;
    }
    for (std::size_t k = 0; k < ix.size(); ++k) {
        out << ix.label(k);
        if (ix.data().projective[k]) out << " P";
        if (ix.data().injective[k]) out << " I";
        out << "\n";
    }
    out << ix.size() << " indecomposables\n";
}

void cmd_ar_quiver(Context& ctx, std::ostream& out) {
    const ARIndex& ix = ctx.index();
    const auto& ar = ix.data();
    const auto& o = ctx.options();
    require_format(o, {"text", "json", "dot"});
    if (o.format == "dot") {
        out << ar_quiver_dot(ar);
        return;
    }
    if (o.format == "json") {
        json j = to_json(ar);
        json arrows = json::array();
        for (auto [from, to] : ar.arrows()) arrows.push_back({from, to});
        std::size_t taus = 0;
        for (const auto& t : ar.tau) taus += t ? 1 : 0;
        j["algebra"] = ix.algebra()->name();
        j["counts"] = {{"vertices", ar.size()}, {"arrows", arrows.size()}, {"tau", taus}};
        j["arrows"] = std::move(arrows);
        out << j.dump(2) << "\n";
        return;
    }
    for (auto [from, to] : ar.arrows()) out << ar.label(from) << " -> " << ar.label(to) << "\n";
    for (std::size_t k = 0; k < ar.size(); ++k) {
        if (ar.tau[k]) out << "tau " << ar.label(k) << " = " << ar.label(*ar.tau[k]) << "\n";
    }
}

void cmd_tau(Context& ctx, std::ostream& out) {
    const Representation m = ctx.modules();
    const Representation r = ctx.options().inverse ? tau_inverse(m) : tau(m);
    if (json_out(ctx.options())) {
        json j = to_json(r);
        j["label"] = ctx.describe(r);
        out << j.dump(2) << "\n";
        return;
    }
    out << ctx.describe(r) << "\n";
}

std::pair<Representation, Representation> from_to(Context& ctx) {
    const auto& o = ctx.options();
    if (o.from.empty() || o.to.empty()) throw UsageError("this command needs --from and --to");
    return {ctx.resolve(o.from), ctx.resolve(o.to)};
}

void cmd_hom(Context& ctx, std::ostream& out) {
    const auto [x, y] = from_to(ctx);
    const std::size_t d = hom_dim(x, y);
    if (json_out(ctx.options())) {
        out << json{{"from", ctx.describe(x)}, {"to", ctx.describe(y)}, {"dim", d}}.dump(2) << "\n";
        return;
    }
    out << d << "\n";
}

void cmd_ext(Context& ctx, std::ostream& out) {
    const auto [x, y] = from_to(ctx);
    const std::size_t d = ext1_dim(x, y);
    if (json_out(ctx.options())) {
        out << json{{"from", ctx.describe(x)}, {"to", ctx.describe(y)}, {"dim", d}}.dump(2) << "\n";
        return;
    }
    out << d << "\n";
}

void cmd_grigid(Context& ctx, std::ostream& out) {
    const Representation m = ctx.modules();
    const bool rigid = is_tau_rigid(m);
    std::vector<std::pair<std::string, std::vector<long long>>> gs;
    Matrix rows(0, static_cast<std::size_t>(ctx.algebra()->vertex_count()));
    if (!m.is_zero()) {
        for (const auto& c : decompose(m, ctx.options().seed).classes) {
            gs.emplace_back(ctx.describe(c.module), g_vector(c.module));
            rows = vstack(rows, Matrix::from_ints({gs.back().second}));
        }
    }
    const bool independent = rank(rows) == gs.size();
    if (json_out(ctx.options())) {
        json g = json::array();
        for (const auto& [label, v] : gs) g.push_back({{"summand", label}, {"g", v}});
        out << json{{"module", ctx.describe(m)}, {"tau_rigid", rigid}, {"g_vectors", g}, {"independent", independent}}.dump(2)
            << "\n";
        return;
    }
    out << "tau-rigid: " << yes_no(rigid) << "\n";
    for (const auto& [label, v] : gs) {
        out << "g(" << label << ") = (";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
        out << ")\n";
    }
    out << "g-vectors independent: " << yes_no(independent) << "\n";
}

void cmd_tilt_check(Context& ctx, std::ostream& out) {
    const Representation m = ctx.modules();
    const TiltingChecks t = tilting_checks(m, ctx.options().seed);
    if (json_out(ctx.options())) {
        out << json{{"module", ctx.describe(m)}, {"partial_tilting", t.partial_tilting}, {"tilting", t.tilting}}.dump(2) << "\n";
        return;
    }
    out << "partial tilting: " << yes_no(t.partial_tilting) << "\ntilting: " << yes_no(t.tilting) << "\n";
}

void cmd_bongartz(Context& ctx, std::ostream& out) {
    const Representation m = ctx.modules();
    std::string result;
    if (ctx.options().tilting) {
        if (!tilting_checks(m, ctx.options().seed).partial_tilting) {
            throw DomainError("tautilt", ctx.describe(m) + " is not partial tilting");
        }
        const Representation t = bongartz_tilting(m, ctx.options().seed);
        const ARIndex* ix = ctx.try_index();
        result = ix ? ix->label(ix->summands(t)) : ctx.describe(t);
    } else {
        const ARIndex& ix = ctx.index();
        result = ix.label(bongartz_tau(ix, ix.summands(m)));
    }
    if (json_out(ctx.options())) {
        out << json{{"module", ctx.describe(m)}, {"completion", result}, {"kind", ctx.options().tilting ? "tilting" : "tau"}}.dump(2)
            << "\n";
        return;
    }
    out << result << "\n";
}

void cmd_statt_check(Context& ctx, std::ostream& out) {
    const ARIndex& ix = ctx.index();
    const ModuleClass t = ix.summands(ctx.modules());
    if (!is_tau_rigid(ix, t)) throw DomainError("tautilt", ix.label(t) + " is not tau-rigid");
    const bool ok = support_tau_tilting_check(ix, t);
    if (json_out(ctx.options())) {
        json j{{"module", ix.label(t)}, {"support_tau_tilting", ok}, {"summands", t.size()}, {"support_rank", support_rank(ix, t)}};
        if (ok) j["pair"] = pair_json(ix, complete_pair(ix, t));
        out << j.dump(2) << "\n";
        return;
    }
    out << "support tau-tilting: " << yes_no(ok) << "\nsummands: " << t.size() << "\nsupport rank: " << support_rank(ix, t) << "\n";
    if (ok) out << "pair: " << pair_label(ix, complete_pair(ix, t)) << "\n";
}

void cmd_mutate(Context& ctx, std::ostream& out) {
    const ARIndex& ix = ctx.index();
    const SupportTauTiltingPair p = read_pair(ctx);
    const std::string& at = ctx.options().at;
    if (at.empty()) throw UsageError("mutate needs --at");
    std::optional<std::size_t> k;
    if (at.size() > 3 && at[0] == 'P' && at[1] == '(' && at.back() == ')') {
        const int v = ctx.vertex(at.substr(2, at.size() - 3));
        if (const auto it = std::find(p.killed.begin(), p.killed.end(), v); it != p.killed.end()) {
            k = p.summands.size() + static_cast<std::size_t>(it - p.killed.begin());
        }
    }
    if (!k) {
        const std::size_t x = ix.find(ctx.resolve(at));
        const auto it = std::find(p.summands.members.begin(), p.summands.members.end(), x);
        if (it == p.summands.members.end()) throw UsageError(at + " is neither a summand nor a killed vertex of the pair");
        k = static_cast<std::size_t>(it - p.summands.members.begin());
    }
    const Mutation m = mutate(ix, p, *k);
    const std::string dir = m.direction == Direction::left ? "left" : "right";
    if (json_out(ctx.options())) {
        out << json{{"input", pair_json(ix, p)}, {"result", pair_json(ix, m.result)}, {"direction", dir}}.dump(2) << "\n";
        return;
    }
    out << pair_label(ix, m.result) << " " << dir << "\n";
}

void cmd_hasse(Context& ctx, std::ostream& out) {
    const auto& o = ctx.options();
    require_format(o, {"text", "json", "dot"});
    const ARIndex& ix = ctx.index();
    const HasseQuiver h = hasse(ix, o.vertex_cap);
    if (o.format == "dot") {
        out << hasse_dot(ix, h);
        return;
    }
    if (o.format == "json") {
        out << hasse_json(ix, h).dump(2) << "\n";
        return;
    }
    for (std::size_t v = 0; v < h.vertices.size(); ++v) out << "v" << v << " " << pair_label(ix, h.vertices[v]) << "\n";
    for (const auto& e : h.edges) out << "v" << e.from << " -> v" << e.to << "\n";
    out << h.vertices.size() << " vertices, " << h.edges.size() << " edges\n";
}

void cmd_torsion_oracle(Context& ctx, std::ostream& out) {
    const ARIndex& ix = ctx.index();
    const auto classes = enumerate_torsion_classes_oracle(ix);
    if (json_out(ctx.options())) {
        out << oracle_json(ix, classes).dump(2) << "\n";
        return;
    }
    out << oracle_table(ix, classes);
    out << classes.size() << " torsion classes\n";
}

void cmd_dagger(Context& ctx, std::ostream& out) {
    const ARIndex& ix = ctx.index();
    const SupportTauTiltingPair p = read_pair(ctx);
    const ARIndex& op = ctx.op_index();
    const SupportTauTiltingPair d = dagger(ix, op, p);
    if (json_out(ctx.options())) {
        out << json{{"input", pair_json(ix, p)}, {"result", pair_json(op, d)}, {"algebra", op.algebra()->name()}}.dump(2) << "\n";
        return;
    }
    out << pair_label(op, d) << " over " << op.algebra()->name() << "\n";
}

void cmd_bricks(Context& ctx, std::ostream& out) {
    const ARIndex& ix = ctx.index();
    const auto recs = bricks(ix);
    if (json_out(ctx.options())) {
        json rows = json::array();
        for (std::size_t k = 0; k < recs.size(); ++k) {
            rows.push_back({{"module", ix.label(k)}, {"brick", recs[k].is_brick}, {"fbrick", ctx.describe(recs[k].fbrick_image)}});
        }
        out << json{{"algebra", ix.algebra()->name()}, {"bricks", rows}}.dump(2) << "\n";
        return;
    }
    std::size_t count = 0;
    for (std::size_t k = 0; k < recs.size(); ++k) {
        out << ix.label(k) << " " << (recs[k].is_brick ? "brick" : "fbrick " + ctx.describe(recs[k].fbrick_image)) << "\n";
        count += recs[k].is_brick ? 1 : 0;
    }
    out << count << " bricks\n";
}

void cmd_probe(Context& ctx, std::ostream& out) {
    const auto& o = ctx.options();
    ProbeCaps caps;
    caps.count_cap = o.count_cap;
    caps.dim_cap = o.dim_cap;
    caps.vertex_cap = o.vertex_cap;
    const ProbeResult r = finiteness_probe(ctx.algebra(), caps, o.seed);
    const bool finite = r.verdict == Finiteness::finite;
    if (json_out(o)) {
        json j{{"algebra", ctx.algebra()->name()},
               {"tau_tilting_finite", finite ? json(true) : json("unknown")},
               {"pairs", r.pairs},
               {"modules", r.modules},
               {"evidence", r.evidence}};
        j["oracle"] = r.oracle ? json(*r.oracle) : json(nullptr);
        out << j.dump(2) << "\n";
        return;
    }
    out << (finite ? "finite" : "unknown") << ": " << r.evidence << "\n";
    if (r.oracle) out << "oracle: " << *r.oracle << " torsion classes\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact tau-tilting computations over bound quiver algebras", "tautilt"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(
        "Modules: P(i), I(i), S(i) for vertex label i; a dimension vector such as 010 naming an enumerated\n"
        "indecomposable; a .json file; sums joined with '+'. When several indecomposables share a dimension\n"
        "vector they are told apart in discovery order by ' suffixes (111, 111') or by #k (111#1, 111#2).\n"
        "Exit status: 0 success, 1 domain error (cap exceeded, not tau-rigid, ...), 2 usage or parse error.");
    app.add_option("--seed", o.seed, "Seed for randomized steps")->envname("TAUTILT_SEED");
    app.add_option("--cache-dir", o.cache_dir, "Directory of the AR data cache")->envname("TAUTILT_CACHE");
    app.add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");
    app.add_flag("--verbose", o.verbose, "Report cache hits and misses on stderr");
    app.add_option("--count-cap", o.count_cap, "Maximum number of indecomposables");
    app.add_option("--dim-cap", o.dim_cap, "Maximum dimension of an indecomposable");
    app.add_option("--vertex-cap", o.vertex_cap, "Maximum number of support tau-tilting pairs");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

    using Handler = void (*)(Context&, std::ostream&);
    struct Verb {
        const char* name;
        const char* help;
        Handler handler;
        bool module = false;
        bool from_to = false;
        bool pair = false;
    };
    const std::vector<Verb> verbs = {
        {"basis", "Residue-path basis of the algebra", cmd_basis},
        {"indecs", "Enumerate the indecomposables", cmd_indecs},
        {"ar-quiver", "Auslander-Reiten quiver", cmd_ar_quiver},
        {"tau", "AR translate of a module (--inverse for tau^-)", cmd_tau, true},
        {"hom", "dim Hom(--from, --to)", cmd_hom, false, true},
        {"ext", "dim Ext^1(--from, --to)", cmd_ext, false, true},
        {"grigid", "tau-rigidity and g-vectors of a module", cmd_grigid, true},
        {"tilt-check", "Partial tilting and tilting checks", cmd_tilt_check, true},
        {"bongartz", "Bongartz completion (tau form, or --tilting)", cmd_bongartz, true},
        {"statt-check", "Support tau-tilting check and completed pair", cmd_statt_check, true},
        {"mutate", "Mutate a pair (--module, --kill) at --at", cmd_mutate, true, false, true},
        {"hasse", "Hasse quiver of support tau-tilting pairs", cmd_hasse},
        {"torsion-oracle", "All torsion classes by brute force", cmd_torsion_oracle},
        {"dagger", "Dagger of a pair (--module, --kill) over the opposite algebra", cmd_dagger, true, false, true},
        {"bricks", "Bricks among the indecomposables", cmd_bricks},
        {"probe", "tau-tilting finiteness probe", cmd_probe},
    };
    Handler chosen = nullptr;
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("algebra", o.algebra, "Algebra file (.alg)")->required();
        if (v.module) sub->add_option("--module,-m", o.modules, "Module selector (repeatable)");
        if (v.from_to) {
            sub->add_option("--from", o.from, "Source module")->required();
            sub->add_option("--to", o.to, "Target module")->required();
        }
        if (v.pair) sub->add_option("--kill,-k", o.kill, "Killed vertex (repeatable)");
        if (std::string(v.name) == "mutate") sub->add_option("--at", o.at, "Summand selector or P(i) for a killed vertex")->required();
        if (std::string(v.name) == "tau") sub->add_flag("--inverse", o.inverse, "Compute tau^- instead");
        if (std::string(v.name) == "bongartz") sub->add_flag("--tilting", o.tilting, "Classical completion by universal extension");
        const bool graph = std::string(v.name) == "ar-quiver" || std::string(v.name) == "hasse";
        sub->callback([&chosen, &o, graph, h = v.handler] {
            if (o.format == "dot" && !graph) throw CLI::ValidationError("--format", "dot output exists only for ar-quiver and hasse");
            chosen = h;
        });
    }

    std::vector<const char*> argv{"tautilt"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "tautilt: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        Context ctx(o, err);
        chosen(ctx, out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "tautilt: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "tautilt: error [" << e.origin() << "]: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "tautilt: error [" << e.origin() << "]: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace tautilt::cli
