#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "qtree/coarse_geometry.hpp"
#include "qtree/coloring.hpp"
#include "qtree/cycle_space.hpp"
#include "qtree/errors.hpp"
#include "qtree/generators.hpp"
#include "qtree/growth.hpp"
#include "qtree/patch_io.hpp"
#include "qtree/witness.hpp"

namespace {

using namespace qtree;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr)) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

/// Ordered key=value record of everything that determines a run.
class RunConfig {
 public:
  explicit RunConfig(std::string command) { set("command", std::move(command)); }
  template <typename T>
  void set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    entries_.emplace_back(key, s.str());
  }
  void write(std::ostream& out) const {
    out << "# run";
    for (const auto& [k, v] : entries_) out << ' ' << k << '=' << v;
    out << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Input patch with its content hash.
struct LoadedPatch {
  PlanarPatch patch;
  std::string sha256;
};

LoadedPatch load(const std::string& path) {
  const std::string bytes = read_file(path);
  return {patch_from_string(bytes), sha256_hex(bytes)};
}

/// Writes to --out when given, else to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InvalidInput("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_header(std::ostream& out, const RunConfig& cfg, const LoadedPatch& in) {
  cfg.write(out);
  out << "# input_sha256=" << in.sha256 << '\n';
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<int> parse_deltas_doubled(const std::vector<std::string>& text) {
  std::vector<int> out;
  for (const auto& t : text) {
    double d = 0;
    try {
      std::size_t used = 0;
      d = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw InvalidInput("bad delta '" + t + "'");
    }
    const double twice = 2 * d;
    if (twice <= 0 || std::abs(twice - std::round(twice)) > 1e-9) {
      throw InvalidInput("delta must be a positive multiple of 1/2");
    }
    out.push_back(static_cast<int>(std::lround(twice)));
  }
  return out;
}

std::string format_delta(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled / 2) + ".5";
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  GeneratorSpec spec;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  const PlanarPatch patch = generate(a.spec);
  const std::string text = patch_to_string(patch);
  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + a.out);
    f << text;
  }
  std::ostream& info = a.out.empty() ? std::cerr : std::cout;
  info << "family=" << a.spec.family << " vertices=" << patch.vertex_count()
       << " edges=" << patch.graph().edge_count() << " faces=" << patch.faces().face_count()
       << " components=" << patch.graph().component_count() << " cert_radius=" << patch.cert_radius()
       << " centers=" << patch.centers().size() << " triangulation=" << patch.is_triangulation()
       << " sha256=" << sha256_hex(text) << '\n';
  if (a.out.empty()) std::cout << text;
  return 0;
}

// ----------------------------------------------------------------- profile

struct ProfileArgs {
  std::string input;
  std::string centers = "patch";
  std::size_t sample = 0;
  int r_min = 8;
  int r_max = -1;
  int max_center_distance = -1;
  std::uint64_t seed = 1;
  unsigned threads = default_threads();
  std::string out;
};

int cmd_profile(const ProfileArgs& a) {
  const LoadedPatch in = load(a.input);
  const PlanarPatch& patch = in.patch;
  const int r_max = a.r_max < 0 ? patch.cert_radius() : a.r_max;
  const int need = std::max(a.r_min, 1) + 1;
  std::vector<Vertex> centers;
  std::mt19937_64 rng(a.seed);
  if (a.sample > 0) {
    const int reach = a.max_center_distance >= 0 ? a.max_center_distance : patch.cert_radius() - need;
    centers = sample_centers(patch, a.sample, reach, rng);
  } else if (a.centers == "patch") {
    centers = patch.centers();
  } else if (a.centers == "all") {
    for (Vertex v = 0; v < static_cast<Vertex>(patch.vertex_count()); ++v) {
      if (certified_radius(patch, v) >= need) centers.push_back(v);
    }
  } else {
    throw InvalidInput("--centers must be 'patch' or 'all'");
  }
  if (centers.empty()) throw CertificationError("no center with a usable certified radius");

  const GrowthProfile prof = growth_profile(patch, centers, a.r_min, r_max, a.threads);
  Output out(a.out);
  RunConfig cfg("profile");
  cfg.set("input", a.input);
  cfg.set("centers", a.sample > 0 ? "sample" : a.centers);
  cfg.set("sample", a.sample);
  cfg.set("r_min", a.r_min);
  cfg.set("r_max", r_max);
  cfg.set("seed", a.seed);
  write_header(out.stream(), cfg, in);
  out.stream() << "center,r,ball_size\n";
  for (const auto& p : prof.profiles) {
    for (int r = 0; r <= p.max_radius(); ++r) out.stream() << p.center << ',' << r << ',' << p.sizes[r] << '\n';
  }
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i < prof.fits.size(); ++i) {
    const auto& f = prof.fits[i];
    out.stream() << "# fit center=" << prof.profiles[i].center << " r_min=" << f.r_min << " r_max=" << f.r_max
                 << " slope=" << std::fixed << std::setprecision(4) << f.slope << std::defaultfloat << '\n';
    lo = std::min(lo, f.slope);
    hi = std::max(hi, f.slope);
  }
  std::cout << "PROFILE centers=" << prof.profiles.size() << std::fixed << std::setprecision(4)
            << " slope_min=" << lo << " slope_max=" << hi << '\n';
  return 0;
}

// ---------------------------------------------------------------- check-bp

struct PairArgs {
  std::size_t budget = 1000;
  bool exhaustive = false;
  int min_distance = 1;
  int max_distance = -1;
  std::vector<Vertex> pair;
  std::uint64_t seed = 1;
  unsigned threads = default_threads();
};

std::vector<std::pair<Vertex, Vertex>> pairs_for(const PlanarPatch& patch, const PairArgs& a, int min_distance) {
  if (!a.pair.empty()) {
    if (a.pair.size() != 2) throw InvalidInput("--pair takes two vertex ids");
    return {{a.pair[0], a.pair[1]}};
  }
  std::mt19937_64 rng(a.seed);
  PairSource src;
  src.kind = a.exhaustive ? PairSource::Kind::kExhaustive : PairSource::Kind::kSampled;
  src.count = a.budget;
  src.min_distance = std::max(a.min_distance, min_distance);
  src.max_distance = a.max_distance;
  return draw_pairs(patch, src, rng);
}

void record_pairs(RunConfig& cfg, const PairArgs& a) {
  cfg.set("pairs", !a.pair.empty() ? "given" : a.exhaustive ? "exhaustive" : "sampled");
  if (!a.pair.empty()) cfg.set("pair", std::to_string(a.pair[0]) + "," + std::to_string(a.pair[1]));
  cfg.set("budget", a.budget);
  cfg.set("min_distance", a.min_distance);
  cfg.set("max_distance", a.max_distance);
  cfg.set("seed", a.seed);
}

struct CheckBpArgs {
  std::string input;
  std::vector<std::string> deltas{"1"};
  PairArgs pairs;
  std::string out;
};

int cmd_check_bp(const CheckBpArgs& a) {
  const LoadedPatch in = load(a.input);
  const auto deltas = parse_deltas_doubled(a.deltas);
  const auto pairs = pairs_for(in.patch, a.pairs, 1);
  std::vector<BpReport> reports;
  bool audit_ok = true;
  for (int dd : deltas) {
    reports.push_back(bp_scan(in.patch, dd, pairs, {}, a.pairs.threads));
    const auto& rep = reports.back();
    for (const auto& pr : rep.pairs) {
      if (pr.violated() && !verify_violation(in.patch.graph(), pr)) audit_ok = false;
    }
    std::cout << "BP delta=" << format_delta(dd) << " pairs=" << rep.pairs.size() << " tested=" << rep.tested()
              << " violations=" << rep.violations() << " violated_all=" << rep.count(BpOutcome::kViolatedAll)
              << " skipped=" << rep.count(BpOutcome::kSkipped) << '\n';
  }
  const auto clean = least_clean_delta_doubled(reports);
  std::cout << "BP least_clean_delta=" << (clean ? format_delta(*clean) : std::string("unbounded"))
            << " audit=" << (audit_ok ? "ok" : "FAILED") << '\n';

  Output out(a.out);
  RunConfig cfg("check-bp");
  cfg.set("input", a.input);
  std::string ds;
  for (int dd : deltas) ds += (ds.empty() ? "" : ",") + format_delta(dd);
  cfg.set("delta", ds);
  record_pairs(cfg, a.pairs);
  write_header(out.stream(), cfg, in);
  write_bp_csv(out.stream(), reports);
  if (!audit_ok) {
    std::cerr << "error: a reported violation failed re-verification\n";
    return 4;
  }
  return 0;
}

// ----------------------------------------------------------------- witness

struct WitnessArgs {
  std::string input;
  int radius = 0;
  int k = 0;
  PairArgs pairs;
  std::string out;
};

// First violation at scale r, preferring vertex midpoints.
std::optional<BpPairResult> find_violation(const PlanarPatch& patch, int delta_doubled, const PairArgs& a,
                                           std::size_t& tested) {
  const auto pairs = pairs_for(patch, a, delta_doubled + 2);
  const BpReport rep = bp_scan(patch, delta_doubled, pairs, {}, a.threads);
  tested = rep.tested();
  const BpPairResult* pick = nullptr;
  for (const auto& pr : rep.pairs) {
    if (!pr.violated()) continue;
    if (!pick) pick = &pr;
    if (pr.geodesic.mid.kind == MidpointKind::kVertex) {
      pick = &pr;
      break;
    }
  }
  if (!pick) return std::nullopt;
  return *pick;
}

int cmd_witness(const WitnessArgs& a, bool ksc) {
  if (a.radius < 1) throw InvalidInput("--radius must be at least 1");
  const LoadedPatch in = load(a.input);
  std::size_t tested = 0;
  const auto violation = find_violation(in.patch, 2 * a.radius, a.pairs, tested);
  Output out(a.out);
  RunConfig cfg(ksc ? "ksc-witness" : "witness");
  cfg.set("input", a.input);
  cfg.set("radius", a.radius);
  if (ksc) cfg.set("k", a.k);
  record_pairs(cfg, a.pairs);
  write_header(out.stream(), cfg, in);
  if (!violation) {
    out.stream() << "NO-VIOLATION r=" << a.radius << " tested=" << tested << '\n';
    if (!a.out.empty()) std::cout << "NO-VIOLATION r=" << a.radius << " tested=" << tested << '\n';
    return 0;
  }
  if (!ksc && !in.patch.is_triangulation()) throw InvalidInput("witness needs a triangulation; use ksc-witness");
  const WitnessCertificate cert =
      ksc ? ksc_growth_witness(in.patch, a.k, *violation, a.radius) : quadratic_growth_witness(in.patch, *violation, a.radius);
  write_certificate(out.stream(), cert);
  const AuditResult audit = audit_certificate(in.patch.graph(), cert);
  if (!a.out.empty()) std::cout << cert.summary_line() << '\n';
  for (const auto& f : audit.failures) std::cerr << "audit: " << f << '\n';
  return cert.ok && audit.ok ? 0 : 4;
}

// ---------------------------------------------------------------- coloring

struct ColoringArgs {
  std::string input;
  std::string scheme = "grid-chain";
  std::string coloring_file;
  int s = 4;
  int radius = 0;
  int width = 2;
  std::string save;
  std::string out;
};

// Rebuilds the generator output a patch came from and checks it matches.
template <typename Build>
auto rebuild(const LoadedPatch& in, const std::string& family, Build build) {
  const auto spec = spec_from_provenance(in.patch);
  if (!spec || spec->family != family) throw InvalidInput("this colouring needs a " + family + " patch");
  auto made = build(*spec);
  if (sha256_hex(patch_to_string(made.first)) != in.sha256) {
    throw InvalidInput("patch does not match its generator provenance");
  }
  return made.second;
}

Coloring builtin_coloring(const LoadedPatch& in, const std::string& scheme, int width, int s,
                          std::vector<std::uint8_t>* lump) {
  const Graph& g = in.patch.graph();
  const Vertex root = in.patch.centers().empty() ? 0 : in.patch.centers().front();
  if (scheme == "voronoi") return voronoi_ball_coloring(g, root, 2);
  if (scheme == "depth") return depth_parity_coloring(g, root);
  if (scheme == "stripe") {
    const auto coords = rebuild(in, "lattice", [](const GeneratorSpec& sp) {
      LatticeCoords c;
      PlanarPatch p = triangular_lattice(sp.radius, &c);
      return std::make_pair(std::move(p), std::move(c));
    });
    return stripe_coloring(coords, width);
  }
  if (scheme == "grid-chain") {
    auto chain = rebuild(in, "grid-chain", [](const GeneratorSpec& sp) {
      GridChain c = subdivided_grid_chain(sp.n_max);
      PlanarPatch p = c.patch;
      return std::make_pair(std::move(p), std::move(c));
    });
    GridChainColoring gc = grid_chain_coloring(chain, s);
    if (lump) *lump = std::move(gc.lump);
    return gc.coloring;
  }
  throw InvalidInput("unknown colouring scheme '" + scheme + "'");
}

Coloring obtain_coloring(const LoadedPatch& in, const std::string& file, const std::string& scheme, int width, int s,
                         std::vector<std::uint8_t>* lump) {
  if (!file.empty()) {
    std::istringstream text(read_file(file));
    Coloring c = read_coloring(text);
    if (c.color.size() != in.patch.vertex_count()) throw InvalidInput("colouring does not match the patch");
    return c;
  }
  return builtin_coloring(in, scheme, width, s, lump);
}

int cmd_coloring(const ColoringArgs& a) {
  const LoadedPatch in = load(a.input);
  const Graph& g = in.patch.graph();
  std::vector<std::uint8_t> lump;
  const Coloring c = obtain_coloring(in, a.coloring_file, a.scheme, a.width, a.s, &lump);
  if (!a.save.empty()) {
    std::ofstream f(a.save, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + a.save);
    write_coloring(f, c);
  }
  Output out(a.out);
  RunConfig cfg("coloring");
  cfg.set("input", a.input);
  cfg.set("scheme", a.coloring_file.empty() ? a.scheme : "file:" + a.coloring_file);
  cfg.set("s", a.s);
  cfg.set("radius", a.radius);
  write_header(out.stream(), cfg, in);

  const MonoComponents comps = monochromatic_components(g, c);
  out.stream() << "components=" << comps.members.size() << '\n';
  const DisjointnessResult dj = disjointness_check(g, c, a.s);
  out.stream() << "disjointness s=" << a.s << " min_gap=" << dj.min_gap << " pair=" << dj.u << ',' << dj.v
               << " ok=" << dj.ok << '\n';
  if (lump.empty()) lump.assign(g.vertex_count(), 0);
  const int cap = 64 * std::max(a.s, 1);
  const ComponentDiameterStats st = diameters_outside(g, c, lump, cap);
  const bool bounded = st.max_diameter < cap;
  out.stream() << "outside_lump components=" << st.components << " max_diameter=" << st.max_diameter
               << " widest_size=" << st.largest << " bounded=" << bounded << '\n';
  if (a.radius > 0) {
    const auto off = coloring_check(g, c, a.radius);
    if (off) {
      out.stream() << "offending index=" << off->index << " size=" << off->members.size() << " pair=" << off->u << ','
                   << off->v << " distance=" << off->distance << '\n';
    } else {
      out.stream() << "offending none r=" << a.radius << '\n';
    }
  }
  std::ostringstream line;
  line << "COLORING s=" << a.s << " disjoint=" << dj.ok << " min_gap=" << dj.min_gap
       << " max_diameter=" << st.max_diameter << " c=" << std::fixed << std::setprecision(3)
       << static_cast<double>(st.max_diameter) / std::max(a.s, 1) << " ok=" << (dj.ok && bounded);
  out.stream() << line.str() << '\n';
  if (!a.out.empty()) std::cout << line.str() << '\n';
  return 0;
}

// ---------------------------------------------------------------- escalate

struct EscalateArgs {
  std::string input;
  int radius = 4;
  std::string scheme = "voronoi";
  std::string coloring_file;
  int width = 2;
  PairArgs pairs;
  std::string out;
};

int cmd_escalate(const EscalateArgs& a) {
  if (a.radius < 1) throw InvalidInput("--radius must be at least 1");
  const LoadedPatch in = load(a.input);
  const Coloring c = obtain_coloring(in, a.coloring_file, a.scheme, a.width, 1, nullptr);
  Output out(a.out);
  RunConfig cfg("escalate");
  cfg.set("input", a.input);
  cfg.set("radius", a.radius);
  cfg.set("scheme", a.coloring_file.empty() ? a.scheme : "file:" + a.coloring_file);
  record_pairs(cfg, a.pairs);
  write_header(out.stream(), cfg, in);
  std::size_t tested = 0;
  const auto violation = find_violation(in.patch, 20 * a.radius, a.pairs, tested);
  if (!violation) {
    std::ostringstream line;
    line << "PRECONDITION no BP violation at R=" << 10 * a.radius << " tested=" << tested;
    out.stream() << line.str() << '\n';
    if (!a.out.empty()) std::cout << line.str() << '\n';
    return 0;
  }
  const EscalationTrace trace = asdim_escalation(in.patch, c, a.radius, *violation);
  write_escalation(out.stream(), trace);
  const AuditResult audit = audit_escalation(in.patch.graph(), c, trace);
  for (const auto& f : audit.failures) std::cerr << "audit: " << f << '\n';
  if (!a.out.empty()) {
    std::cout << "ESCALATION r=" << trace.r << " steps=" << trace.steps.size() << " result=" << to_string(trace.result)
              << " property=" << trace.violated_property << '\n';
  }
  if (trace.result == EscalationTrace::Result::kInconclusive) return 3;
  return audit.ok ? 0 : 4;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& input) {
  const std::string bytes = read_file(input);
  const PlanarPatch patch = patch_from_string(bytes);
  const bool roundtrip = patch_to_string(patch) == bytes;
  std::string regenerated = "n/a";
  if (const auto spec = spec_from_provenance(patch)) {
    regenerated = patch_to_string(generate(*spec)) == bytes ? "match" : "differs";
  }
  std::cout << "VALID vertices=" << patch.vertex_count() << " edges=" << patch.graph().edge_count()
            << " faces=" << patch.faces().face_count() << " cert_radius=" << patch.cert_radius()
            << " triangulation=" << patch.is_triangulation() << " roundtrip=" << roundtrip
            << " regenerated=" << regenerated << " sha256=" << sha256_hex(bytes) << '\n';
  return roundtrip && regenerated != "differs" ? 0 : 2;
}

void add_pair_options(CLI::App* cmd, PairArgs& p) {
  cmd->add_option("--budget", p.budget, "Number of sampled pairs");
  cmd->add_flag("--exhaustive", p.exhaustive, "Test every pair in the search region");
  cmd->add_option("--min-dist", p.min_distance, "Smallest pair distance");
  cmd->add_option("--max-dist", p.max_distance, "Largest pair distance (-1: none)");
  cmd->add_option("--pair", p.pair, "Test only this pair")->expected(2);
  cmd->add_option("--seed", p.seed, "Seed for pair sampling");
  cmd->add_option("--threads", p.threads, "Worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth, bottleneck and colouring experiments on planar patches"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a patch");
  g->add_option("family", gen.spec.family, "lattice | square-lattice | alpha-tree | cone | glued-trees | "
                                          "parabolic-cone | grid-chain | long-cycle-chain")
      ->required();
  g->add_option("--radius", gen.spec.radius, "Radius");
  g->add_option("--alpha", gen.spec.alpha, "Growth exponent");
  g->add_option("--nmax", gen.spec.n_max, "Number of blocks");
  g->add_option("--max-leaves", gen.spec.max_leaves, "Leaves to glue");
  g->add_option("--seed", gen.spec.seed, "Recorded seed");
  g->add_option("--out", gen.out, "Output patch file");

  ProfileArgs prof;
  auto* p = app.add_subcommand("profile", "Ball growth profile as CSV");
  p->add_option("patch", prof.input)->required();
  p->add_option("--centers", prof.centers, "patch | all");
  p->add_option("--sample", prof.sample, "Sample this many centers instead");
  p->add_option("--max-center-dist", prof.max_center_distance, "Sampled centers lie this close to a patch center");
  p->add_option("--rmin", prof.r_min, "Fit window start");
  p->add_option("--rmax", prof.r_max, "Largest radius (-1: certified radius)");
  p->add_option("--seed", prof.seed);
  p->add_option("--threads", prof.threads);
  p->add_option("--out", prof.out, "CSV file");

  CheckBpArgs bp;
  auto* b = app.add_subcommand("check-bp", "Bottleneck property scan as CSV");
  b->add_option("patch", bp.input)->required();
  b->add_option("--delta", bp.deltas, "Scales (multiples of 1/2)");
  add_pair_options(b, bp.pairs);
  b->add_option("--out", bp.out, "CSV file");

  WitnessArgs wit;
  auto* w = app.add_subcommand("witness", "Quadratic growth certificate from a bottleneck violation");
  w->add_option("patch", wit.input)->required();
  w->add_option("--radius", wit.radius, "Scale r")->required();
  add_pair_options(w, wit.pairs);
  w->add_option("--out", wit.out, "Certificate file");

  WitnessArgs kw;
  auto* k = app.add_subcommand("ksc-witness", "Growth certificate for a k-simply-connected graph");
  k->add_option("patch", kw.input)->required();
  k->add_option("--radius", kw.radius, "Scale r")->required();
  k->add_option("--k", kw.k, "Cycle length bound")->required();
  add_pair_options(k, kw.pairs);
  k->add_option("--out", kw.out, "Certificate file");

  ColoringArgs col;
  auto* c = app.add_subcommand("coloring", "Monochromatic component report for a two-colouring");
  c->add_option("patch", col.input)->required();
  c->add_option("--scheme", col.scheme, "grid-chain | voronoi | depth | stripe");
  c->add_option("--coloring", col.coloring_file, "Read the colouring from a file");
  c->add_option("--s", col.s, "Disjointness scale");
  c->add_option("--radius", col.radius, "Also report the first component of diameter >= r");
  c->add_option("--width", col.width, "Stripe width");
  c->add_option("--save", col.save, "Write the colouring to a file");
  c->add_option("--out", col.out, "Report file");

  EscalateArgs esc;
  auto* e = app.add_subcommand("escalate", "Escalate a bottleneck violation at 10r against a colouring");
  e->add_option("patch", esc.input)->required();
  e->add_option("--radius", esc.radius, "Scale r");
  e->add_option("--scheme", esc.scheme, "voronoi | depth | stripe");
  e->add_option("--coloring", esc.coloring_file, "Read the colouring from a file");
  e->add_option("--width", esc.width, "Stripe width");
  add_pair_options(e, esc.pairs);
  e->add_option("--out", esc.out, "Trace file");

  std::string vinput;
  auto* v = app.add_subcommand("validate", "Audit a patch file");
  v->add_option("patch", vinput)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*p) return cmd_profile(prof);
    if (*b) return cmd_check_bp(bp);
    if (*w) return cmd_witness(wit, false);
    if (*k) return cmd_witness(kw, true);
    if (*c) return cmd_coloring(col);
    if (*e) return cmd_escalate(esc);
    if (*v) return cmd_validate(vinput);
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return ex.exit_code();
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
