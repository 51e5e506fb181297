#include "report.hpp"

#include "lagrange3/constructions.hpp"
#include "lagrange3/markov.hpp"
#include "lagrange3/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <memory>

using namespace lagrange3;
using report::Json;
using report::Report;
using report::Status;

namespace {

constexpr std::size_t kMaxCohnDepth = 12;
constexpr std::size_t kMaxTildeDepth = 6;

struct Globals {
    std::string format = "json";
    std::string cache_path;
    std::shared_ptr<PairCache> cache;
};

Json positions(const std::vector<std::size_t>& v)
{
    Json out = Json::array();
    for (std::size_t x : v) {
        out.push_back(x);
    }
    return out;
}

Json cut_record(const CutReport& r)
{
    Json rec;
    rec["position"] = r.pos.left_len;
    rec["class"] = to_string(r.cls);
    report::put_interval(rec, r.enclosure);
    rec["depth"] = r.depth;
    if (r.exact) {
        rec["exact"] = report::exact_json(*r.exact);
    }
    return rec;
}

std::string letters(const std::vector<Quotient>& q)
{
    std::string s;
    for (Quotient x : q) {
        s += std::to_string(x);
    }
    return s;
}

// --- cohn ---------------------------------------------------------------

struct CohnArgs {
    std::size_t depth = 3;
    bool markov = false;
};

void run_cohn(const CohnArgs& a, Report& rep)
{
    rep.input = {{"depth", a.depth}, {"markov", a.markov}};
    if (a.depth > kMaxCohnDepth) {
        throw Error(ErrorKind::DepthTooLarge,
                    "depth " + std::to_string(a.depth) + " exceeds " + std::to_string(kMaxCohnDepth));
    }
    auto tree = cohn_tree(a.depth);
    std::vector<Json> recs(tree.size());
    parallel_for(tree.size(), [&](std::size_t i) {
        Json rec;
        rec["index"] = i;
        rec["path"] = render_ops(tree[i].path);
        rec["word"] = tree[i].word;
        rec["length"] = 2 * tree[i].word.size();
        if (a.markov) {
            Integer z = cohn_to_markov(tree[i].word);
            rec["z"] = z.get_str();
            report::put_value(rec, "value", spectrum_value(z).value);
        }
        recs[i] = rec;
    });
    rep.results = std::move(recs);
}

// --- pairs --------------------------------------------------------------

struct PairsArgs {
    std::string family = "bar";
    std::size_t depth = 3;
    std::string ops;
    bool has_ops = false;
};

void run_pairs(const PairsArgs& a, const Globals& g, Report& rep)
{
    bool tilde = a.family == "tilde";
    if (!tilde && a.family != "bar") {
        throw Error(ErrorKind::BadArgument, "family must be bar or tilde");
    }
    rep.input = {{"family", a.family}};
    std::vector<std::vector<Op>> words;
    if (a.has_ops) {
        rep.input["ops"] = a.ops;
        words.push_back(parse_ops(a.ops));
    } else {
        rep.input["depth"] = a.depth;
        std::size_t cap = tilde ? kMaxTildeDepth : kMaxCohnDepth;
        if (a.depth > cap) {
            throw Error(ErrorKind::DepthTooLarge,
                        "depth " + std::to_string(a.depth) + " exceeds " + std::to_string(cap));
        }
        words = all_op_words(a.depth, true);
    }
    for (const auto& ops : words) {
        WordPair p;
        std::string key = render_ops(ops);
        if (tilde && g.cache && g.cache->find(key, p)) {
            // cached
        } else {
            p = tilde ? tilde_pair(ops) : bar_pair(ops);
            if (tilde && g.cache) {
                g.cache->put(key, p);
            }
        }
        Json rec;
        rec["path"] = key;
        rec["alpha"] = p.alpha;
        rec["beta"] = p.beta;
        rec["alpha_len"] = 2 * p.alpha.size();
        rec["beta_len"] = 2 * p.beta.size();
        rep.results.push_back(rec);
    }
}

// --- word ---------------------------------------------------------------

struct WordArgs {
    std::string spec;
    std::size_t length = 64;
    std::string mod;
};

void run_word(const WordArgs& a, const Globals& g, Report& rep)
{
    rep.input = {{"spec", a.spec}};
    if (!a.mod.empty()) {
        rep.input["mod"] = a.mod;
        Word w = parse_word(a.spec);
        if (w.alphabet != Alphabet::AB) {
            w = chi_factor(w);
        }
        std::string out = word_mod(w.letters, parse_word_mod(a.mod));
        rep.results.push_back({{"word", w.letters}, {"mod", a.mod}, {"result", out}, {"length", 2 * out.size()},
                               {"palindrome", is_palindrome(out)}});
        return;
    }
    rep.input["length"] = a.length;
    WordSpec spec = parse_word_spec(a.spec);
    LazyWord w = make_lazy_word(spec, g.cache);
    std::vector<Quotient> q = w.available(a.length);
    Json rec;
    rec["spec"] = render(spec);
    rec["description"] = w.description();
    rec["letters"] = letters(q);
    rec["length"] = q.size();
    try {
        rec["ab"] = chi_factor(Word{Alphabet::OneTwo, letters(q)}).letters;
    } catch (const OddRun&) {
        // a prefix may end inside a run
        rec["ab"] = nullptr;
    }
    rep.results.push_back(rec);
    if (q.size() < a.length) {
        rep.status = Status::Undecided;
    }
}

// --- classify -----------------------------------------------------------

struct ClassifyArgs {
    std::string word;
    long long pos = -1;
    std::string mode = "finite";
    std::size_t max_depth = kDefaultMaxDepth;
};

void run_classify(const ClassifyArgs& a, const Globals& g, Report& rep)
{
    rep.input = {{"word", a.word}, {"mode", a.mode}};
    if (a.pos >= 0) {
        rep.input["pos"] = a.pos;
    }
    if (a.mode == "finite") {
        Word w;
        std::size_t left = 0;
        if (a.word.find('|') != std::string::npos) {
            CutLiteral c = parse_cut_literal(a.word);
            w = c.word;
            left = c.pos.left_len;
        } else {
            if (a.pos < 0) {
                throw Error(ErrorKind::BadArgument, "finite mode needs a position or a '|' in the word");
            }
            Word lit = parse_word(a.word);
            left = lit.alphabet == Alphabet::AB ? apply_cut_sugar(lit, static_cast<std::size_t>(a.pos))
                                                : static_cast<std::size_t>(a.pos);
            w = lit;
        }
        std::vector<Quotient> q = quotients_of(w);
        if (left == 0 || left >= q.size()) {
            throw Error(ErrorKind::BadArgument, "cut position must lie strictly inside the word");
        }
        FiniteCutReport r = classify_finite_cut(q, {left});
        Json rec;
        rec["position"] = left;
        rec["class"] = to_string(r.cls);
        rec["value_lo"] = to_decimal(r.min);
        rec["value_hi"] = to_decimal(r.max);
        rec["exact_lo"] = report::exact_json(r.min);
        rec["exact_hi"] = report::exact_json(r.max);
        rep.results.push_back(rec);
        return;
    }
    if (a.mode != "infinite") {
        throw Error(ErrorKind::BadArgument, "mode must be finite or infinite");
    }
    rep.input["max_depth"] = a.max_depth;
    if (a.pos < 0) {
        throw Error(ErrorKind::BadArgument, "infinite mode needs a position");
    }
    WordSpec spec = parse_word_spec(a.word);
    LazyWord w = make_lazy_word(spec, g.cache);
    auto left = static_cast<std::size_t>(a.pos);
    if (auto lit = literal_of(spec, left / 2 + 2)) {
        left = apply_cut_sugar(*lit, left);
    }
    CutReport r = classify_infinite_cut(w, {left}, {}, a.max_depth);
    rep.results.push_back(cut_record(r));
    if (r.cls == CutClass::Undecided) {
        rep.status = Status::Undecided;
    }
}

// --- count / witness ----------------------------------------------------

struct CountArgs {
    std::string spec;
    std::size_t horizon = 0;
    std::size_t first = 0;
    std::size_t max_depth = kDefaultMaxDepth;
    std::size_t prefix = 64;
};

std::size_t horizon_for(const WordSpec& spec, std::size_t requested, const Globals& g)
{
    if (requested > 0) {
        return requested;
    }
    if (const auto* w = std::get_if<WitnessSpec>(&spec)) {
        return default_horizon(*w, *make_stream(*w, g.cache));
    }
    return 1000;
}

void run_count(const CountArgs& a, const Globals& g, Report& rep)
{
    WordSpec spec = parse_word_spec(a.spec);
    std::size_t horizon = horizon_for(spec, a.horizon, g);
    rep.input = {{"spec", render(spec)}, {"horizon", horizon}, {"first", a.first}, {"max_depth", a.max_depth}};
    CountResult c = count_bad_cuts(make_lazy_word(spec, g.cache), horizon, a.max_depth, a.first);
    for (std::size_t p : c.bad) {
        rep.results.push_back({{"position", p}, {"class", "Bad"}});
    }
    for (std::size_t p : c.undecided) {
        rep.results.push_back({{"position", p}, {"class", "Undecided"}});
    }
    rep.summary = {{"count", c.count() ? Json(*c.count()) : Json(nullptr)},
                   {"bad", positions(c.bad)},
                   {"undecided", positions(c.undecided)},
                   {"deepest", c.deepest}};
    if (!c.count()) {
        rep.status = Status::Undecided;
    }
}

void run_witness(const CountArgs& a, const Globals& g, Report& rep)
{
    WitnessSpec spec = parse_witness_spec(a.spec);
    auto stream = make_stream(spec, g.cache);
    std::size_t horizon = a.horizon > 0 ? a.horizon : default_horizon(spec, *stream);
    rep.input = {{"spec", render(spec)}, {"horizon", horizon}, {"max_depth", a.max_depth}};
    LazyWord w = witness(spec, stream);
    CountResult c = count_bad_cuts(w, horizon, a.max_depth);
    for (std::size_t p : c.bad) {
        rep.results.push_back(cut_record(classify_infinite_cut(w, {p}, {}, a.max_depth)));
    }
    for (std::size_t p : c.undecided) {
        rep.results.push_back(cut_record(classify_infinite_cut(w, {p}, {}, a.max_depth)));
    }
    rep.summary = {{"prefix", letters(w.prefix(a.prefix))},
                   {"count", c.count() ? Json(*c.count()) : Json(nullptr)},
                   {"bad", positions(c.bad)},
                   {"undecided", positions(c.undecided)},
                   {"eventually_constant", stream->eventually_constant()}};
    if (!c.count()) {
        rep.status = Status::Undecided;
    }
}

// --- markov / mtilde ----------------------------------------------------

struct MarkovArgs {
    std::string limit = "100";
    std::string period;
    std::string z;
};

void run_markov(const MarkovArgs& a, Report& rep)
{
    if (!a.period.empty()) {
        rep.input = {{"period", a.period}};
        Json rec{{"period", a.period}};
        report::put_value(rec, "value", periodic_markov_value(a.period));
        rec["z"] = cohn_to_markov(a.period).get_str();
        rep.results.push_back(rec);
        return;
    }
    if (!a.z.empty()) {
        rep.input = {{"z", a.z}};
        SpectrumValue v = spectrum_value(Integer(a.z));
        Json rec{{"z", v.z.get_str()}};
        report::put_value(rec, "value", v.value);
        rep.results.push_back(rec);
        return;
    }
    rep.input = {{"limit", a.limit}};
    for (const MarkovTriple& t : markov_tree(Integer(a.limit))) {
        Json rec{{"z1", t.z1.get_str()}, {"z2", t.z2.get_str()}, {"z3", t.z3.get_str()}};
        report::put_value(rec, "value", spectrum_value(t.z3).value);
        rep.results.push_back(rec);
    }
}

struct MTildeArgs {
    std::string x;
    std::string evidence;
    std::size_t horizon = 0;
    std::size_t max_depth = kDefaultMaxDepth;
};

void run_mtilde(const MTildeArgs& a, const Globals& g, Report& rep)
{
    if (!a.evidence.empty()) {
        WordSpec spec = parse_word_spec(a.evidence);
        std::size_t horizon = horizon_for(spec, a.horizon, g);
        rep.input = {{"evidence", render(spec)}, {"horizon", horizon}, {"max_depth", a.max_depth}};
        Interval e = m_tilde_evidence(make_lazy_word(spec, g.cache), horizon, a.max_depth);
        Json rec{{"spec", render(spec)}};
        report::put_interval(rec, e);
        rec["above_3"] = compare(e.lo, Quad(3L)) > 0;
        rec["at_most_3"] = compare(e.hi, Quad(3L)) <= 0;
        rep.results.push_back(rec);
        if (!rec["above_3"].get<bool>() && !rec["at_most_3"].get<bool>()) {
            rep.status = Status::Undecided;
        }
        return;
    }
    if (a.x.empty()) {
        throw Error(ErrorKind::BadArgument, "give an expansion such as 1;(1), or --evidence SPEC");
    }
    CFSpec x = parse_cf(a.x);
    rep.input = {{"x", render_cf(x)}};
    MTilde m = m_tilde(x);
    Json rec{{"x", render_cf(x)}};
    report::put_value(rec, "value", m.value);
    rec["attained"] = m.attained;
    rec["index"] = m.index ? Json(*m.index) : Json(nullptr);
    report::put_value(rec, "lagrange", lagrange_value(x));
    rep.results.push_back(rec);
}

// --- verify -------------------------------------------------------------

void run_verify(const std::string& suite, const VerifyOptions& o, Report& rep)
{
    rep.input = {{"suite", suite},         {"depth", o.depth},     {"tilde_length", o.tilde_length},
                 {"max_n", o.max_n},       {"max_depth", o.max_depth}, {"seed", o.seed},
                 {"samples", o.samples}};
    std::size_t failed = 0;
    std::size_t undecided = 0;
    for (const CaseResult& c : run_suite(suite, o)) {
        rep.results.push_back(
            {{"suite", c.suite}, {"case", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
        failed += c.outcome == Outcome::Fail;
        undecided += c.outcome == Outcome::Undecided;
    }
    rep.summary = {{"cases", rep.results.size()}, {"failed", failed}, {"undecided", undecided}};
    if (failed > 0) {
        rep.status = Status::Failed;
    } else if (undecided > 0) {
        rep.status = Status::Undecided;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact continued-fraction cut values, Markov numbers and the words around 3."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache", g.cache_path, "tilde pair cache file");

    std::function<void(Report&)> run;
    std::string command;

    CohnArgs cohn;
    auto* c_cohn = app.add_subcommand("cohn", "list Cohn tree vertices");
    c_cohn->add_option("--depth", cohn.depth, "tree depth (at most 12)");
    c_cohn->add_flag("--markov", cohn.markov, "add z and the spectrum value");
    c_cohn->callback([&] { run = [&](Report& r) { run_cohn(cohn, r); }; });

    PairsArgs pairs;
    auto* c_pairs = app.add_subcommand("pairs", "word pairs of the bar or tilde tree");
    c_pairs->add_option("--family", pairs.family, "bar or tilde");
    c_pairs->add_option("--depth", pairs.depth, "all operator words up to this length");
    auto* ops_opt = c_pairs->add_option("--ops", pairs.ops, "a single operator word, e.g. UVU");
    c_pairs->callback([&] {
        pairs.has_ops = ops_opt->count() > 0;
        run = [&](Report& r) { run_pairs(pairs, g, r); };
    });

    WordArgs word;
    auto* c_word = app.add_subcommand("word", "letters of a word spec, or a word modification");
    c_word->add_option("spec", word.spec, "periodic:HEAD/PERIOD, open:PREFIX, witness spec or literal")->required();
    c_word->add_option("--length", word.length, "letters to print");
    c_word->add_option("--mod", word.mod, "plus, minus, sup_b, sub_a or transpose");
    c_word->callback([&] { run = [&](Report& r) { run_word(word, g, r); }; });

    ClassifyArgs cls;
    auto* c_cls = app.add_subcommand("classify", "classify one cut");
    c_cls->add_option("word", cls.word, "literal (bb|aab, or word with POS) or word spec")->required();
    c_cls->add_option("pos", cls.pos, "left_len in {1,2} letters");
    c_cls->add_option("--mode", cls.mode, "finite or infinite");
    c_cls->add_option("--max-depth", cls.max_depth, "largest refinement depth");
    c_cls->callback([&] { run = [&](Report& r) { run_classify(cls, g, r); }; });

    CountArgs count;
    auto* c_count = app.add_subcommand("count", "count bad cuts up to a horizon");
    c_count->add_option("spec", count.spec, "word spec")->required();
    c_count->add_option("--horizon", count.horizon, "last left_len scanned");
    c_count->add_option("--first", count.first, "first left_len scanned");
    c_count->add_option("--max-depth", count.max_depth, "largest refinement depth");
    c_count->callback([&] { run = [&](Report& r) { run_count(count, g, r); }; });

    CountArgs wit;
    auto* c_wit = app.add_subcommand("witness", "bad cuts of a witness word");
    c_wit->add_option("spec", wit.spec, "n=2;ops=UV;cont=alt;variant=projection")->required();
    c_wit->add_option("--horizon", wit.horizon, "last left_len scanned");
    c_wit->add_option("--max-depth", wit.max_depth, "largest refinement depth");
    c_wit->add_option("--prefix", wit.prefix, "letters of the word to echo");
    c_wit->callback([&] { run = [&](Report& r) { run_witness(wit, g, r); }; });

    MarkovArgs mk;
    auto* c_mk = app.add_subcommand("markov", "Markov triples and spectrum values");
    c_mk->add_option("--limit", mk.limit, "largest z3");
    c_mk->add_option("--period", mk.period, "Markov value of period^inf and its z");
    c_mk->add_option("--z", mk.z, "spectrum value of one Markov number");
    c_mk->callback([&] { run = [&](Report& r) { run_markov(mk, r); }; });

    MTildeArgs mt;
    auto* c_mt = app.add_subcommand("mtilde", "sup of the cut values of x = [x0; x1, ...]");
    c_mt->add_option("x", mt.x, "eventually periodic expansion, e.g. 1;(1)");
    c_mt->add_option("--evidence", mt.evidence, "enclose the max cut value of a word spec instead");
    c_mt->add_option("--horizon", mt.horizon, "last left_len for --evidence");
    c_mt->add_option("--max-depth", mt.max_depth, "largest refinement depth");
    c_mt->callback([&] { run = [&](Report& r) { run_mtilde(mt, g, r); }; });

    std::string suite;
    VerifyOptions vo;
    auto* c_ver = app.add_subcommand("verify", "run a property suite");
    c_ver->add_option("suite", suite, "identities, cuts, markov, counts, injectivity or all")
        ->required()
        ->check(CLI::IsMember({"identities", "cuts", "markov", "counts", "injectivity", "all"}));
    c_ver->add_option("--depth", vo.depth, "bar tree depth (identities) or Cohn depth (markov)");
    c_ver->add_option("--tilde-length", vo.tilde_length, "longest tilde operator word");
    c_ver->add_option("--max-n", vo.max_n, "largest projection witness n");
    c_ver->add_option("--max-depth", vo.max_depth, "largest refinement depth");
    c_ver->add_option("--seed", vo.seed, "seed for sampled cases");
    c_ver->add_option("--samples", vo.samples, "sampled cases per property");
    c_ver->callback([&] { run = [&](Report& r) { run_verify(suite, vo, r); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    command = app.get_subcommands().front()->get_name();

    Report rep;
    rep.command = command;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (!g.cache_path.empty()) {
            g.cache = std::make_shared<PairCache>();
            std::size_t rejected = g.cache->load(g.cache_path);
            if (rejected > 0) {
                std::cerr << "cache: dropped " << rejected << " inconsistent lines\n";
            }
        }
        run(rep);
        if (g.cache) {
            g.cache->save(g.cache_path);
        }
    } catch (const Error& e) {
        // running out of known letters is an open answer, not a failure
        rep.status = e.kind() == ErrorKind::Undecidable ? Status::Undecided : Status::Failed;
        rep.results.clear();
        rep.summary = nullptr;
        rep.error = {{"kind", to_string(e.kind())}, {"message", e.what()}};
        if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
            rep.error["offset"] = pe->offset();
        }
    }
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << report::render(rep, report::parse_format(g.format));
    return report::exit_code(rep.status);
}
