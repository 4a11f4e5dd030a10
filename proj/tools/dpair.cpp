#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dualpair/abelian.hpp"
#include "dualpair/error.hpp"
#include "dualpair/gallery.hpp"
#include "dualpair/galois.hpp"
#include "dualpair/points.hpp"
#include "dualpair/validate.hpp"

using namespace dp;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kError = 2 };

struct Report {
  json j = json::object();
  std::string plain;
};

struct Options {
  std::string format = "plain";
  std::uint64_t seed = 0;
  std::string file, file2, out, over;
  std::string side = "A";
  std::string points;
  long i = 0, j = 0;
  bool numeric = false;
  long prec = 0;
  std::string mod;
  std::string prime, range;
  std::size_t index = 0;
  bool index_set = false;
  long times = 0;
  bool times_set = false;
  std::string gallery_name;
  std::string a = "1";
  std::size_t n = 2;
  std::string base = "Q";
};

Side parse_side(const std::string& s) {
  if (s == "A" || s == "a") return Side::A;
  if (s == "B" || s == "b") return Side::B;
  throw Error(ErrorKind::Parse, "side must be A or B");
}

std::string vec_str(const Field& K, const Vec& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + K.to_string(v[k]);
  return s + ")";
}

json vec_json(const Field& K, const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(K.to_string(x));
  return a;
}

std::string hd_str(const HdElement& x) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
  return s + ")";
}

void write_pair(const DualPair& P, const std::string& out, Report& r) {
  const std::string text = pair_to_json(P).dump(2) + "\n";
  if (out.empty()) {
    r.plain = text;
    r.j = pair_to_json(P);
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + out);
  f << text;
  r.j = {{"written", out}, {"dim", P.dim()}};
  r.plain = "wrote " + out + " (dim " + std::to_string(P.dim()) + ")\n";
}

FieldPtr target_field(const DualPair& P, const Options& o) {
  return o.over.empty() ? P.field() : parse_field_spec(o.over);
}

const Vec& pick(const std::vector<Vec>& pts, long k) {
  if (k < 0 || static_cast<std::size_t>(k) >= pts.size())
    throw Error(ErrorKind::Parse, "point index " + std::to_string(k) + " out of range (" + std::to_string(pts.size()) +
                                      " points)");
  return pts[static_cast<std::size_t>(k)];
}

void describe_structure(const ElemDivSeq& d, Report& r) {
  r.j["d"] = d;
  r.plain += "d=" + seq_str(d) + "\n";
}

int cmd_validate(const Options& o, Report& r) {
  DualPair P = load_pair(o.file);
  if (o.numeric) {
    const NumericOutcome out = validate_numeric_q(P, static_cast<mpfr_prec_t>(o.prec));
    r.j = numeric_to_json(out);
    r.plain = out.valid ? "valid\n" : "invalid: " + out.reason + "\n";
    if (out.valid) r.plain += "d=" + seq_str(out.d) + "\nprecision=" + std::to_string(out.precision) + "\n";
    return out.valid ? kOk : kInvalid;
  }
  if (!o.mod.empty()) {
    DualPair R;
    try {
      R = reduce_mod_p(P, mpz_class(o.mod));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadReduction) throw;
      r.j = {{"valid", false}, {"reason", e.what()}};
      r.plain = std::string("invalid: ") + e.what() + "\n";
      return kInvalid;
    }
    R.set_validation(Validation::Unchecked);
    const SplittingField sf = splitting_field_finite(R);
    const ValidationOutcome v = validate_via_splitting(R, sf.L, sf.zeta, o.seed);
    r.j = {{"valid", v.valid}, {"reason", v.reason}, {"field", sf.L->descriptor()}};
    r.plain = v.valid ? "valid\n" : "invalid: " + v.reason + "\n";
    if (v.valid) {
      r.j["structure"] = structure_to_json(*v.structure);
      r.plain += "d=" + seq_str(v.structure->d) + "\nfield=" + sf.L->name() + "\n";
    }
    return v.valid ? kOk : kInvalid;
  }
  const AxiomReport a = verify_axioms(P);
  r.j = {{"valid", a.ok()}, {"failures", a.failures}};
  r.plain = a.ok() ? "valid\n" : "invalid\n";
  for (const auto& f : a.failures) r.plain += "  " + f + "\n";
  return a.ok() ? kOk : kInvalid;
}

int cmd_structure(const Options& o, Report& r) {
  DualPair P = load_pair(o.file);
  if (!o.over.empty()) P = base_change(P, parse_field_spec(o.over));
  const StructureResult S = group_structure(P, std::nullopt, o.seed);
  r.j = structure_to_json(S);
  describe_structure(S.d, r);
  r.plain += "zeta_order=" + std::to_string(S.zeta_order) + "\n";
  for (std::size_t k = 0; k < S.points.size(); ++k)
    r.plain += "P" + std::to_string(k) + " " + vec_str(*S.field, S.points[k]) + " -> " + hd_str(S.point_bijection[k]) + "\n";
  return kOk;
}

int cmd_points(const Options& o, Report& r) {
  const DualPair P = load_pair(o.file);
  const PointGroup G(P, target_field(P, o));
  const auto pts = G.points(parse_side(o.side), o.seed);
  json arr = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    arr.push_back(vec_json(*G.field(), pts[k]));
    r.plain += std::to_string(k) + " " + vec_str(*G.field(), pts[k]) + "\n";
  }
  r.j = {{"field", G.field()->descriptor()}, {"side", o.side}, {"points", arr}};
  return kOk;
}

int cmd_add(const Options& o, Report& r) {
  const DualPair P = load_pair(o.file);
  const PointGroup G(P, target_field(P, o));
  const Side s = parse_side(o.side);
  const auto pts = G.points(s, o.seed);
  const auto comma = o.points.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "--points expects I,J");
  long a = 0, b = 0;
  try {
    a = std::stol(o.points.substr(0, comma));
    b = std::stol(o.points.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "--points expects I,J");
  }
  const Vec sum = G.add(pick(pts, a), pick(pts, b), s);
  const auto at = std::find(pts.begin(), pts.end(), sum);
  r.j = {{"sum", vec_json(*G.field(), sum)}, {"index", at - pts.begin()}};
  r.plain = std::to_string(at - pts.begin()) + " " + vec_str(*G.field(), sum) + "\n";
  return kOk;
}

int cmd_negate(const Options& o, Report& r) {
  const DualPair P = load_pair(o.file);
  const PointGroup G(P, target_field(P, o));
  const Side s = parse_side(o.side);
  const auto pts = G.points(s, o.seed);
  const Vec neg = G.negate(pick(pts, o.i), s);
  const auto at = std::find(pts.begin(), pts.end(), neg);
  r.j = {{"negative", vec_json(*G.field(), neg)}, {"index", at - pts.begin()}};
  r.plain = std::to_string(at - pts.begin()) + " " + vec_str(*G.field(), neg) + "\n";
  return kOk;
}

int cmd_pairing(const Options& o, Report& r) {
  const DualPair P = load_pair(o.file);
  const PointGroup G(P, target_field(P, o));
  const auto pts = G.points(Side::A, o.seed), dpts = G.points(Side::B, o.seed);
  const Elem v = G.pairing(pick(pts, o.i), pick(dpts, o.j));
  r.j = {{"value", G.field()->to_string(v)}};
  r.plain = G.field()->to_string(v) + "\n";
  return kOk;
}

json morphism_json(const Morphism& m) { return {{"F", matrix_to_json(m.F)}, {"G", matrix_to_json(m.G)}}; }

int cmd_hom(const Options& o, Report& r) {
  const DualPair P = load_pair(o.file), Q = load_pair(o.file2);
  const auto homs = hom_set(P, Q, o.seed);
  json arr = json::array();
  r.plain = "count=" + std::to_string(homs.size()) + "\n";
  for (std::size_t k = 0; k < homs.size(); ++k) {
    arr.push_back(morphism_json(homs[k]));
    r.plain += std::to_string(k) + " F=" + homs[k].F.str() + (is_isomorphism(homs[k]) ? " iso" : "") + "\n";
  }
  r.j = {{"count", homs.size()}, {"morphisms", arr}};
  return kOk;
}

int cmd_sum(const Options& o, Report& r) {
  write_pair(direct_sum(load_pair(o.file), load_pair(o.file2)).pair, o.out, r);
  return kOk;
}

// The morphism for kernel and cokernel: [N] on one pair, or the k-th element
// of Hom(P, Q).
Morphism chosen_morphism(const Options& o) {
  const DualPair P = load_pair(o.file);
  if (o.times_set) {
    if (!o.file2.empty()) throw Error(ErrorKind::Parse, "--times takes a single pair");
    Morphism m = zero_morphism(P, P);
    const Morphism id = identity_morphism(P);
    for (long k = 0; k < o.times; ++k) m = add_morphisms(m, id);
    return m;
  }
  if (o.file2.empty() || !o.index_set) throw Error(ErrorKind::Parse, "give --times N, or a target pair and --index K");
  const auto homs = hom_set(P, load_pair(o.file2), o.seed);
  if (o.index >= homs.size())
    throw Error(ErrorKind::Parse, "morphism index out of range (" + std::to_string(homs.size()) + " morphisms)");
  return homs[o.index];
}

int cmd_kernel(const Options& o, Report& r, bool co) {
  if (o.times < 0) throw Error(ErrorKind::Parse, "--times must be non-negative");
  const Morphism m = chosen_morphism(o);
  const KernelResult k = co ? cokernel(m) : kernel(m);
  write_pair(k.pair, o.out, r);
  if (!o.out.empty()) {
    const StructureResult S = group_structure(k.pair, std::nullopt, o.seed);
    r.j["d"] = S.d;
    r.plain += "d=" + seq_str(S.d) + "\n";
  }
  return kOk;
}

int cmd_dual(const Options& o, Report& r) {
  write_pair(dual(load_pair(o.file)), o.out, r);
  return kOk;
}

int cmd_reduce(const Options& o, Report& r) {
  write_pair(reduce_mod_p(load_pair(o.file), mpz_class(o.prime)), o.out, r);
  return kOk;
}

std::vector<mpz_class> primes_for(const Options& o) {
  std::vector<mpz_class> ps;
  if (!o.prime.empty()) ps.emplace_back(o.prime);
  if (!o.range.empty()) {
    const auto colon = o.range.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "--range expects LO:HI");
    mpz_class lo(o.range.substr(0, colon)), hi(o.range.substr(colon + 1));
    for (mpz_class p = lo; p <= hi; ++p)
      if (p >= 2 && is_prime(p)) ps.push_back(p);
  }
  if (ps.empty()) throw Error(ErrorKind::Parse, "give -p P or --range LO:HI");
  return ps;
}

int cmd_frobenius(const Options& o, Report& r) {
  const DualPair P = load_pair(o.file);
  const auto ps = primes_for(o);
  std::vector<std::optional<FrobeniusResult>> res(ps.size());
  std::vector<std::string> err(ps.size());
  // Primes are independent; results are reported in prime order.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < ps.size(); ++k) {
    try {
      res[k] = frobenius_matrix(P, ps[k]);
    } catch (const Error& e) {
      err[k] = e.what();
    }
  }
  json arr = json::array();
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const std::string p = ps[k].get_str();
    if (res[k]) {
      arr.push_back({{"p", p}, {"matrix", end_to_json(res[k]->M)}, {"field_degree", res[k]->field_degree}});
      r.plain += "p=" + p + " " + end_str(res[k]->M) + "\n";
    } else {
      arr.push_back({{"p", p}, {"error", err[k]}});
      r.plain += "p=" + p + " skipped: " + err[k] + "\n";
    }
  }
  r.j = {{"results", arr}};
  // A single requested prime that fails is an error; skips inside a range are not.
  return ps.size() == 1 && !res[0] ? kError : kOk;
}

int cmd_gallery(const Options& o, Report& r) {
  const FieldPtr R = parse_field_spec(o.base);
  DualPair P;
  const std::string& g = o.gallery_name;
  if (g == "trivial")
    P = gallery::trivial_pair(R);
  else if (g == "e2") {
    mpq_class a;
    if (a.set_str(o.a, 10) != 0) throw Error(ErrorKind::Parse, "--a expects a rational");
    a.canonicalize();
    P = gallery::e2_pair(a);
    if (!o.base.empty() && o.base != "Q") P = base_change(P, R);
  } else if (g == "ss2")
    P = gallery::supersingular_e2_pair();
  else if (g == "mu")
    P = gallery::mu_constant_pair(o.n, R);
  else if (g == "mu-idem")
    P = gallery::mu_idempotent_pair(o.n, R);
  else if (g == "const")
    P = gallery::constant_pair(o.n, R);
  else
    throw Error(ErrorKind::Parse, "unknown gallery entry '" + g + "'");
  write_pair(P, o.out, r);
  return kOk;
}

int cmd_identify(const Options& o, Report& r) {
  std::ifstream f(o.file);
  if (!f) throw Error(ErrorKind::Parse, "cannot read " + o.file);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  const auto g = identify_group(table_from_json(j));
  if (!g) {
    r.j = {{"group", false}};
    r.plain = "not a group table\n";
    return kInvalid;
  }
  r.j = group_to_json(*g);
  describe_structure(g->d, r);
  for (std::size_t k = 0; k < g->p.size(); ++k) r.plain += std::to_string(k) + " -> " + hd_str(g->p[k]) + "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with dual pairs of algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized internals");

  auto file = [&](CLI::App* c) { c->add_option("file", o.file, "Pair file")->required(); };
  auto over = [&](CLI::App* c) { c->add_option("--over", o.over, "Field of points (default: base)"); };
  auto side = [&](CLI::App* c) { c->add_option("--side", o.side, "A or B"); };
  auto out = [&](CLI::App* c) { c->add_option("-o,--output", o.out, "Output pair file (default: stdout)"); };

  std::map<CLI::App*, std::function<int(Report&)>> run;

  auto* v = app.add_subcommand("validate", "Check the dual-pair axioms");
  file(v);
  v->add_flag("--numeric", o.numeric, "Complex points over Q with certified rounding");
  v->add_option("--prec", o.prec, "Starting precision in bits (with --numeric)");
  v->add_option("--mod", o.mod, "Reduce modulo a prime and validate over a splitting field");
  run[v] = [&](Report& r) { return cmd_validate(o, r); };

  auto* st = app.add_subcommand("structure", "Elementary divisors of the rational points");
  file(st);
  over(st);
  run[st] = [&](Report& r) { return cmd_structure(o, r); };

  auto* pt = app.add_subcommand("points", "List points in canonical order");
  file(pt);
  over(pt);
  side(pt);
  run[pt] = [&](Report& r) { return cmd_points(o, r); };

  auto* ad = app.add_subcommand("add", "Add two points given by index");
  file(ad);
  over(ad);
  side(ad);
  ad->add_option("--points", o.points, "I,J")->required();
  run[ad] = [&](Report& r) { return cmd_add(o, r); };

  auto* ng = app.add_subcommand("negate", "Negate a point given by index");
  file(ng);
  over(ng);
  side(ng);
  ng->add_option("-i", o.i, "Point index")->required();
  run[ng] = [&](Report& r) { return cmd_negate(o, r); };

  auto* pr = app.add_subcommand("pairing", "Duality pairing of point i with dual point j");
  file(pr);
  over(pr);
  pr->add_option("-i", o.i, "Point index")->required();
  pr->add_option("-j", o.j, "Dual point index")->required();
  run[pr] = [&](Report& r) { return cmd_pairing(o, r); };

  auto* hm = app.add_subcommand("hom", "All morphisms between two pairs");
  file(hm);
  hm->add_option("target", o.file2, "Target pair file")->required();
  run[hm] = [&](Report& r) { return cmd_hom(o, r); };

  auto* sm = app.add_subcommand("sum", "Direct sum of two pairs");
  file(sm);
  sm->add_option("second", o.file2, "Second pair file")->required();
  out(sm);
  run[sm] = [&](Report& r) { return cmd_sum(o, r); };

  for (const bool co : {false, true}) {
    auto* k = app.add_subcommand(co ? "cokernel" : "kernel", co ? "Cokernel of a morphism" : "Kernel of a morphism");
    file(k);
    k->add_option("target", o.file2, "Target pair file (with --index)");
    k->add_option("--index", o.index, "Index into the hom set")->each([&](const std::string&) { o.index_set = true; });
    k->add_option("--times", o.times, "Use multiplication by N on the pair")->each([&](const std::string&) {
      o.times_set = true;
    });
    out(k);
    run[k] = [&, co](Report& r) { return cmd_kernel(o, r, co); };
  }

  auto* du = app.add_subcommand("dual", "Cartier dual");
  file(du);
  out(du);
  run[du] = [&](Report& r) { return cmd_dual(o, r); };

  auto* fr = app.add_subcommand("frobenius", "Frobenius matrix on the points at good primes");
  file(fr);
  fr->add_option("-p", o.prime, "Prime");
  fr->add_option("--range", o.range, "All primes in LO:HI");
  run[fr] = [&](Report& r) { return cmd_frobenius(o, r); };

  auto* rd = app.add_subcommand("reduce", "Reduce a pair over Q modulo a prime");
  file(rd);
  rd->add_option("-p", o.prime, "Prime")->required();
  out(rd);
  run[rd] = [&](Report& r) { return cmd_reduce(o, r); };

  auto* ga = app.add_subcommand("gallery", "Write a standard pair");
  ga->add_option("name", o.gallery_name, "trivial | e2 | ss2 | mu | mu-idem | const")->required();
  ga->add_option("--a", o.a, "Parameter of e2");
  ga->add_option("--n", o.n, "Order for mu, mu-idem, const");
  ga->add_option("--base", o.base, "Base field");
  out(ga);
  run[ga] = [&](Report& r) { return cmd_gallery(o, r); };

  auto* it = app.add_subcommand("identify-table", "Identify a group from a pairing table");
  file(it);
  run[it] = [&](Report& r) { return cmd_identify(o, r); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  Report report;
  int code = kError;
  try {
    for (auto* sub : app.get_subcommands()) code = run.at(sub)(report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (o.format == "json") std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  if (o.format == "json")
    std::cout << report.j.dump(2) << "\n";
  else
    std::cout << report.plain;
  return code;
}
