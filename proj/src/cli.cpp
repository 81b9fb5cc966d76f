#include "gu3/cli.hpp"

#include "gu3/cayley.hpp"
#include "gu3/covering.hpp"
#include "gu3/error.hpp"
#include "gu3/finite_field.hpp"
#include "gu3/gate_sets.hpp"
#include "gu3/navigation.hpp"
#include "gu3/parallel.hpp"
#include "gu3/spectral_formulas.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace gu3::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kSubcommands[] = {"gen", "sizes", "identify", "spectrum", "navigate", "cover", "supergates"};

bool uses_p(const std::string& cmd) { return cmd != "supergates"; }

Variant resolved_variant(const RunConfig& c) { return parse_variant(c.variant); }

// --- cache ---------------------------------------------------------------------------

std::optional<fs::path> cache_dir() {
  const char* dir = std::getenv("GU3_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) return std::nullopt;
  return path;
}

/// Writes via a temporary file and rename so concurrent readers never see a torn file.
void write_atomically(const fs::path& path, const std::string& bytes) {
  const fs::path tmp = path.string() + ".tmp" + std::to_string(std::hash<std::string>{}(bytes));
  {
    std::ofstream os(tmp, std::ios::binary);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!os) return;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

json gates_json(const GateSet& gs) {
  json arr = json::array();
  for (std::size_t k = 0; k < gs.size(); ++k) {
    json m = to_json(gs.lifts[k]);
    m["index"] = k;
    arr.push_back(std::move(m));
  }
  return arr;
}

/// Gate sets are memoized as their lift lists; a cache entry that fails to parse or
/// re-canonicalize to the stored order is ignored and rebuilt.
GateSet load_gate_set(std::int64_t p, Variant v) {
  if (v == Variant::Super) return super_gates();
  const auto dir = cache_dir();
  const std::string name = "gates-" + std::string(to_string(v)) + "-p" + std::to_string(p) + ".json";
  if (dir) {
    std::ifstream is(*dir / name);
    if (is) {
      try {
        const json j = json::parse(is);
        GateSet gs;
        gs.p = p;
        gs.variant = v;
        for (const auto& m : j.at("gates")) {
          gs.lifts.push_back(similitude_from_json(m));
          gs.elements.push_back(canonicalize(gs.lifts.back()));
        }
        if (j.at("p").get<std::int64_t>() == p && std::is_sorted(gs.elements.begin(), gs.elements.end()) &&
            !gs.elements.empty()) {
          return gs;
        }
      } catch (const std::exception&) {
      }
    }
  }
  GateSet gs = make_gate_set(p, v);
  if (dir) write_atomically(*dir / name, json{{"p", p}, {"gates", gates_json(gs)}}.dump() + "\n");
  return gs;
}

constexpr char kClosureMagic[8] = {'G', 'U', '3', 'C', 'L', 'S', '0', '1'};

Closure load_closure(const FiniteField& f, const std::vector<FinMat>& gens, const std::string& tag,
                     std::size_t cap) {
  const auto dir = cache_dir();
  const std::string name = "closure-" + tag + "-q" + std::to_string(f.q()) + ".bin";
  if (dir) {
    std::ifstream is(*dir / name, std::ios::binary);
    if (is) {
      char magic[8];
      std::uint64_t count = 0;
      is.read(magic, 8);
      is.read(reinterpret_cast<char*>(&count), sizeof(count));
      if (is && std::equal(magic, magic + 8, kClosureMagic) && count <= cap) {
        Closure c;
        c.elements.resize(count);
        is.read(reinterpret_cast<char*>(c.elements.data()), static_cast<std::streamsize>(count * sizeof(MatKey)));
        if (is && std::is_sorted(c.elements.begin(), c.elements.end())) return c;
      }
    }
  }
  Closure c = closure(f, gens, cap);
  if (dir && !c.exceeded_cap) {
    std::string bytes(kClosureMagic, 8);
    const std::uint64_t count = c.elements.size();
    bytes.append(reinterpret_cast<const char*>(&count), sizeof(count));
    bytes.append(reinterpret_cast<const char*>(c.elements.data()), c.elements.size() * sizeof(MatKey));
    write_atomically(*dir / name, bytes);
  }
  return c;
}

// --- output helpers --------------------------------------------------------------------

std::string to_decimal(const Int& n) { return n.str(); }

std::string to_decimal(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

json complex_json(const Complex& z, bool as_pair) {
  if (as_pair) return json::array({z.real(), z.imag()});
  return z.real();
}

json complex_list(const std::vector<Complex>& zs, bool as_pair) {
  json arr = json::array();
  for (const auto& z : zs) arr.push_back(complex_json(z, as_pair));
  return arr;
}

json envelope(const RunConfig& c, json result) {
  return {{"schema_version", kSchemaVersion}, {"command", c.subcommand}, {"config", c.to_json()},
          {"result", std::move(result)}};
}

void emit(const RunConfig& c, const json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream os(c.out_path, std::ios::binary);
  if (!os) throw ValidationError("cannot open output file " + c.out_path);
  os << text;
  if (!os) throw Error("failed writing " + c.out_path);
}

// --- subcommands -----------------------------------------------------------------------

int run_gen(const RunConfig& c, std::ostream& out) {
  const Variant v = resolved_variant(c);
  const GateSet gs = load_gate_set(c.p, v);
  const std::int64_t p = v == Variant::Super ? 2 : c.p;
  json manifest = {{"p", p}, {"p_prime", v == Variant::Super ? 2 : p_prime(p)}, {"variant", to_string(v)},
                   {"count", gs.size()}};
  emit(c, envelope(c, {{"manifest", std::move(manifest)}, {"gates", gates_json(gs)}}), out);
  return kOk;
}

int run_sizes(const RunConfig& c, std::ostream& out) {
  const Variant v = resolved_variant(c);
  std::optional<WordBall> ball;
  if (c.bfs) ball.emplace(load_gate_set(c.p, v), c.l_max, c.cap);
  json rows = json::array();
  bool ok = true;
  for (int l = 1; l <= c.l_max; ++l) {
    const SphereStats s = sphere_stats(c.p, l, v);
    json row = {{"l", l},
                {"lambda_triv", to_decimal(s.lambda_triv)},
                {"lambda_ram", to_decimal(s.lambda_ram)},
                {"lambda_ram_value", s.lambda_ram.convert_to<double>()}};
    if (ball) {
      const std::size_t n = ball->sphere(l).size();
      row["bfs"] = n;
      row["bfs_matches"] = Int(n) == s.lambda_triv;
      ok = ok && Int(n) == s.lambda_triv;
    }
    rows.push_back(std::move(row));
  }
  emit(c, envelope(c, {{"rows", std::move(rows)}}), out);
  return ok ? kOk : kVerification;
}

std::vector<FinMat> reduced_gates(const FiniteField& f, const GateSet& gs) {
  std::vector<FinMat> gens;
  for (const auto& lift : gs.lifts) gens.push_back(reduce_gate(f, lift.entries()));
  return gens;
}

int run_identify(const RunConfig& c, std::ostream& out) {
  const Variant v = resolved_variant(c);
  const GroupPrediction pred = predict_group(c.p, c.q);
  const FiniteField f(c.q);
  const GateSet gs = load_gate_set(c.p, v);
  const auto gens = reduced_gates(f, gs);
  const bool in_cubes = det_class_test(f, gens);
  const bool predicted_cubes = pred.kind == GroupKind::PSL || pred.kind == GroupKind::PSU;
  const Int predicted_order = group_order(pred.kind, c.q);

  json result = {{"label", pred.label},
                 {"tri_partite", pred.tri_partite},
                 {"symbol", pred.symbol ? json(*pred.symbol) : json(nullptr)},
                 {"predicted_order", to_decimal(predicted_order)},
                 {"det_class_in_cubes", in_cubes},
                 {"det_class_consistent", in_cubes == predicted_cubes}};
  bool ok = in_cubes == predicted_cubes;
  // The order check needs the whole group below the cap; otherwise it is skipped.
  if (packable(f) && predicted_order <= Int(c.cap)) {
    const Closure cl = load_closure(f, gens, std::string(to_string(v)) + "-p" + std::to_string(c.p), c.cap);
    result["closure_exceeded_cap"] = cl.exceeded_cap;
    if (cl.exceeded_cap) {
      result["closure_order"] = nullptr;
    } else {
      result["closure_order"] = cl.order();
      result["closure_matches"] = Int(cl.order()) == predicted_order;
      ok = ok && Int(cl.order()) == predicted_order;
    }
  } else {
    result["closure_exceeded_cap"] = true;
    result["closure_order"] = nullptr;
  }
  emit(c, envelope(c, std::move(result)), out);
  return ok ? kOk : kVerification;
}

void write_text(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ValidationError("cannot open output file " + path);
  writer(os);
  if (!os) throw Error("failed writing " + path);
}

int run_spectrum(RunConfig c, std::ostream& out) {
  const Variant v = resolved_variant(c);
  const FiniteField f(c.q);
  const GroupPrediction pred = predict_group(c.p, c.q);
  const GateSet gs = load_gate_set(c.p, v);
  const auto gens = reduced_gates(f, gs);
  const Closure group = load_closure(f, gens, std::string(to_string(v)) + "-p" + std::to_string(c.p), c.cap);
  if (group.exceeded_cap) {
    throw ResourceLimit("group closure exceeded the cap of " + std::to_string(c.cap) + " elements");
  }
  const CayleyGraph g = build_cayley(f, group, gens);
  if (!c.edges_path.empty()) write_text(c.edges_path, [&](std::ostream& os) { g.write_edges(os); });
  if (!c.vertices_path.empty()) write_text(c.vertices_path, [&](std::ostream& os) { g.write_vertices(os); });

  if (c.mode == "auto") {
    c.mode = g.size() / g.left_order() <= kDenseBlockLimit ? "dense" : "extremal";
    if (!c.tol) c.tol = c.mode == "dense" ? 1e-8 : 1e-6;
  }
  SpectrumReport report;
  json graph = {{"vertices", g.size()},
                {"degree", g.degree()},
                {"symmetric", g.symmetric()},
                {"connected", g.connected()},
                {"left_symmetry_order", g.left_order()}};
  if (c.mode == "dense") {
    report = spectrum_dense(g);
    graph["normality_defect"] = normality_defect(g);
  } else {
    if (!g.symmetric()) throw ValidationError("extremal mode needs a symmetric generating set (use --variant full)");
    SparseOptions opt;
    opt.k = c.k;
    opt.basis = c.basis;
    opt.seed = c.seed;
    report = extremal_sparse(g, opt);
  }
  const RamanujanMode rm = c.p % 4 == 1 ? RamanujanMode::Split : RamanujanMode::Inert;
  ramanujan_check(report, c.p, rm, *c.tol);

  const bool pairs = report.complex_spectrum;
  json spectrum = {{"dense", report.dense},
                   {"complex", pairs},
                   {"eigenvalues", complex_list(report.eigenvalues, pairs)},
                   {"max_residual", report.max_residual},
                   {"converged", report.converged},
                   {"iterations", report.iterations}};
  json check = {{"tol", report.tol},
                {"bound", report.bound},
                {"trivial", complex_list(report.trivial, pairs)},
                {"zero_class", complex_list(report.zero_class, pairs)},
                {"failing", complex_list(report.failing, pairs)},
                {"nontrivial_max", report.nontrivial_max ? json(*report.nontrivial_max) : json(nullptr)},
                {"nontrivial_min", report.nontrivial_min ? json(*report.nontrivial_min) : json(nullptr)},
                {"pass", report.pass}};
  json result = {{"group", pred.label}, {"graph", std::move(graph)}, {"spectrum", std::move(spectrum)},
                 {"ramanujan", std::move(check)}};
  emit(c, envelope(c, std::move(result)), out);
  return report.pass && report.converged ? kOk : kVerification;
}

json read_json_input(const RunConfig& c, std::istream& in) {
  try {
    if (c.in_path.empty()) return json::parse(in);
    std::ifstream is(c.in_path);
    if (!is) throw ValidationError("cannot open input file " + c.in_path);
    return json::parse(is);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
}

int run_navigate(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Variant v = resolved_variant(c);
  json input = read_json_input(c, in);
  if (!input.is_object()) throw ValidationError("navigate input must be a matrix object");
  if (!input.contains("p")) input["p"] = c.p;
  if (input.at("p") != c.p) throw ValidationError("input matrix p differs from --p");
  const SimilitudeMatrix g = similitude_from_json(input);
  const ProjElement target = canonicalize(g.entries());

  const Navigator nav(load_gate_set(c.p, v));
  NavigationTrace trace;
  const Word word = nav.navigate(target, &trace);
  const ProjElement check = evaluate_word(word, nav.gates());

  json letters = json::array();
  for (const auto& l : word) letters.push_back({{"index", l.index}, {"inverse", l.inverse}});
  const bool verified = check == target;
  json result = {{"word", std::move(letters)},
                 {"length", word.size()},
                 {"check", to_json(SimilitudeMatrix(check.matrix(), c.p))},
                 {"verified", verified},
                 {"trace",
                  {{"steps", trace.steps},
                   {"fallback_steps", trace.fallback_steps},
                   {"precision_raises", trace.precision_raises}}}};
  emit(c, envelope(c, std::move(result)), out);
  return verified ? kOk : kVerification;
}

int run_cover(const RunConfig& c, std::ostream& out) {
  const CoveringReport r = covering_stats(load_gate_set(c.p, resolved_variant(c)), c.l_max, c.samples, c.seed,
                                          std::max<std::size_t>(c.cap, 1));
  json summary = json::array();
  for (const auto& s : r.summary) {
    summary.push_back({{"l", s.l},
                       {"ball_size", s.ball_size},
                       {"max", s.max},
                       {"mean", s.mean},
                       {"q50", s.q50},
                       {"q90", s.q90},
                       {"q99", s.q99},
                       {"ball_volume_at_max", s.ball_volume_at_max},
                       {"volume_ratio", s.volume_ratio}});
  }
  json cdf = json::array();
  for (const auto& [rad, frac] : r.radial_cdf) cdf.push_back({rad, frac});
  json result = {{"sphere_sizes", r.sphere_sizes},
                 {"summary", std::move(summary)},
                 {"radial_cdf", {{"draws", std::max(r.samples, kRadialSamples)}, {"points", std::move(cdf)}}},
                 {"distances", r.distances}};
  emit(c, envelope(c, std::move(result)), out);
  return kOk;
}

int run_supergates(const RunConfig& c, std::ostream& out) {
  const GateSet gs = super_gates();
  const SuperGateCheck chk = check_super_gates(c.syllables);
  auto scalar = [](const std::optional<GaussInt>& z) { return z ? json(z->to_string()) : json(nullptr); };
  json result = {{"sigma", to_json(gs.lifts[0])},
                 {"tau", to_json(gs.lifts[1])},
                 {"sigma_cubed_scalar", scalar(chk.sigma_cubed)},
                 {"tau_cubed_scalar", scalar(chk.tau_cubed)},
                 {"words", chk.words},
                 {"distinct", chk.distinct},
                 {"pass", chk.pass()}};
  emit(c, envelope(c, std::move(result)), out);
  return chk.pass() ? kOk : kVerification;
}

}  // namespace

void RunConfig::validate() {
  if (std::find(std::begin(kSubcommands), std::end(kSubcommands), subcommand) == std::end(kSubcommands)) {
    throw ValidationError("unknown subcommand '" + subcommand + "'");
  }
  if (variant == "auto") {
    const bool prefer_split = (subcommand == "spectrum" || subcommand == "navigate") && p % 4 == 1;
    variant = subcommand == "supergates" ? "super" : prefer_split ? "split" : "full";
  }
  const Variant v = parse_variant(variant);
  const bool needs_p = uses_p(subcommand) && !(subcommand == "gen" && v == Variant::Super);
  if (needs_p && (p < 3 || !is_prime(p))) throw ValidationError("--p must be an odd prime");
  if (v == Variant::Split && p % 4 != 1) throw ValidationError("the split variant needs p = 1 mod 4");
  if (v == Variant::Super && subcommand != "gen" && subcommand != "supergates") {
    throw ValidationError("the super variant is only available to gen and supergates");
  }
  if (subcommand == "identify" || subcommand == "spectrum") {
    if (q < 3 || !is_prime(q)) throw ValidationError("--q must be an odd prime");
    if (q == p) throw ValidationError("--q must differ from --p");
  }
  if ((subcommand == "sizes" || subcommand == "cover") && l_max < (subcommand == "sizes" ? 1 : 0)) {
    throw ValidationError("--lmax out of range");
  }
  if (mode != "auto" && mode != "dense" && mode != "extremal") throw ValidationError("--mode must be dense or extremal");
  if (subcommand == "spectrum" && mode != "auto" && !tol) tol = mode == "dense" ? 1e-8 : 1e-6;
  if (tol && !(*tol > 0.0)) throw ValidationError("--tol must be positive");
  if (samples == 0) throw ValidationError("--samples must be positive");
  if (syllables < 0) throw ValidationError("--L must be non-negative");
  if (k < 1 || basis < 2 * k + 2) throw ValidationError("--basis must be at least 2k + 2");
}

nlohmann::json RunConfig::to_json() const {
  json j = {{"subcommand", subcommand}};
  const std::string& s = subcommand;
  if (s != "supergates") j["variant"] = variant;
  if (uses_p(s) && !(s == "gen" && variant == "super")) j["p"] = p;
  if (s == "identify" || s == "spectrum") {
    j["q"] = q;
    j["cap"] = cap;
  }
  if (s == "sizes") {
    j["lmax"] = l_max;
    j["bfs"] = bfs;
    if (bfs) j["cap"] = cap;
  }
  if (s == "spectrum") {
    j["mode"] = mode;
    j["tol"] = tol ? json(*tol) : json(nullptr);
    j["seed"] = seed;
    j["k"] = k;
    j["basis"] = basis;
    j["edges"] = edges_path;
    j["vertices"] = vertices_path;
  }
  if (s == "navigate") j["in"] = in_path.empty() ? "-" : in_path;
  if (s == "cover") {
    j["lmax"] = l_max;
    j["samples"] = samples;
    j["seed"] = seed;
    j["cap"] = cap;
  }
  if (s == "supergates") j["L"] = syllables;
  j["out"] = out_path.empty() ? "-" : out_path;
  return j;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Golden gates on PU(3): gate sets, Cayley spectra, navigation, covering", "gu3"};
  app.require_subcommand(1, 1);
  app.add_option("--threads", c.threads, "worker threads (default: available parallelism)");

  auto add_p = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--p", c.p, "odd prime p");
    if (required) o->required();
  };
  auto add_variant = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--variant", c.variant, "gate set variant")->check(CLI::IsMember(allowed));
  };

  auto* gen = app.add_subcommand("gen", "enumerate a gate set");
  add_p(gen, false);
  add_variant(gen, {"auto", "full", "split", "super"});
  gen->add_option("--out", c.out_path, "output JSON file (default stdout)");

  auto* sizes = app.add_subcommand("sizes", "closed-form sphere sizes and Ramanujan bounds");
  add_p(sizes, true);
  add_variant(sizes, {"auto", "full", "split"});
  sizes->add_option("--lmax", c.l_max, "largest word length");
  sizes->add_flag("--bfs", c.bfs, "cross-check against breadth-first sphere sizes");
  sizes->add_option("--cap", c.cap, "element cap for --bfs");
  sizes->add_option("--out", c.out_path, "output JSON file");

  auto* identify = app.add_subcommand("identify", "identify the group generated mod q");
  add_p(identify, true);
  identify->add_option("--q", c.q, "odd prime q != p")->required();
  add_variant(identify, {"auto", "full", "split"});
  identify->add_option("--cap", c.cap, "closure element cap");
  identify->add_option("--out", c.out_path, "output JSON file");

  auto* spectrum = app.add_subcommand("spectrum", "Cayley graph spectrum and Ramanujan check");
  add_p(spectrum, true);
  spectrum->add_option("--q", c.q, "odd prime q != p")->required();
  add_variant(spectrum, {"auto", "full", "split"});
  spectrum->add_option("--mode", c.mode, "dense or extremal")->check(CLI::IsMember({"auto", "dense", "extremal"}));
  spectrum->add_option("--tol", c.tol, "Ramanujan check tolerance");
  spectrum->add_option("--seed", c.seed, "Lanczos start vector seed");
  spectrum->add_option("--k", c.k, "extremal eigenvalues per end");
  spectrum->add_option("--basis", c.basis, "Lanczos basis size");
  spectrum->add_option("--cap", c.cap, "closure element cap");
  spectrum->add_option("--edges", c.edges_path, "write the edge list 'u v gen_index'");
  spectrum->add_option("--vertices", c.vertices_path, "write the vertex key manifest");
  spectrum->add_option("--out", c.out_path, "output JSON file");

  auto* navigate = app.add_subcommand("navigate", "shortest word for a lattice element");
  add_p(navigate, true);
  add_variant(navigate, {"auto", "full", "split"});
  navigate->add_option("--in", c.in_path, "input matrix JSON (default stdin)");
  navigate->add_option("--out", c.out_path, "output JSON file");

  auto* cover = app.add_subcommand("cover", "nearest-word distances of Haar samples");
  add_p(cover, true);
  add_variant(cover, {"auto", "full", "split"});
  cover->add_option("--lmax", c.l_max, "largest word length");
  cover->add_option("--samples", c.samples, "Haar samples");
  cover->add_option("--seed", c.seed, "sample seed");
  cover->add_option("--cap", c.cap, "word ball element cap");
  cover->add_option("--out", c.out_path, "output JSON file");

  auto* supergates = app.add_subcommand("supergates", "order-3 generators and the free-product check");
  supergates->add_option("--L", c.syllables, "largest syllable length");
  supergates->add_option("--out", c.out_path, "output JSON file");

  // CLI11 consumes the argument vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }

  try {
    c.subcommand = app.get_subcommands().front()->get_name();
    // Defaults that differ by subcommand.
    if (c.subcommand == "cover" && cover->get_option("--cap")->count() == 0) c.cap = 20'000'000;
    if (c.subcommand == "sizes" && sizes->get_option("--cap")->count() == 0) c.cap = 20'000'000;
    c.validate();
    set_thread_count(c.threads);
    if (c.subcommand == "gen") return run_gen(c, out);
    if (c.subcommand == "sizes") return run_sizes(c, out);
    if (c.subcommand == "identify") return run_identify(c, out);
    if (c.subcommand == "spectrum") return run_spectrum(c, out);
    if (c.subcommand == "navigate") return run_navigate(c, in, out);
    if (c.subcommand == "cover") return run_cover(c, out);
    return run_supergates(c, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const PrecisionExceeded& e) {
    err << "precision limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cin, std::cout, std::cerr);
}

}  // namespace gu3::cli
