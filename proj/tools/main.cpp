// somborchain: Sombor indices of random polygonal chains.
//
// Subcommands compute exact index values on explicit chains, closed-form
// moments, exhaustive-enumeration ground truth, seeded Monte Carlo samples,
// a normality diagnostic, and an audit of the published closed-form
// expressions against the exact values. Output is plain text, JSON
// (schema_version 1) or CSV, and is byte-identical for identical inputs and
// seeds.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sombor/moments.hpp"
#include "sombor/oracle.hpp"
#include "sombor/published.hpp"
#include "sombor/simulate.hpp"
#include "sombor/sombor.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr double kCliProbTolerance = 1e-6;

struct OutputOpts {
  std::string format = "plain";
  std::string output_path;       // empty = stdout
  bool full_precision = false;
};

std::string format_real(double v, bool full_precision) {
  char buf[64];
  if (full_precision) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  }
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void emit(const std::string& text, const OutputOpts& out) {
  if (out.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.output_path, std::ios::binary);
  if (!file) throw sombor::validation_error("cannot open output file: " + out.output_path);
  file << text;
}

unsigned default_threads() {
  if (const char* env = std::getenv("SOMBORCHAIN_THREADS")) {
    const unsigned long v = std::strtoul(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // auto
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string piece = text.substr(start, end - start);
    const auto first = piece.find_first_not_of(" \t");
    const auto last = piece.find_last_not_of(" \t");
    parts.push_back(first == std::string::npos ? std::string()
                                               : piece.substr(first, last - first + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

struct ProbsResult {
  std::vector<double> probs;
  double input_sum = 0.0;
  bool renormalized = false;
};

// The CLI accepts probability vectors whose sum is off by up to 1e-6 (decimal
// truncation in shells) and renormalizes; the library itself requires 1e-12.
ProbsResult parse_probs(const std::string& text) {
  ProbsResult result;
  if (text.empty()) throw sombor::validation_error("--p requires a comma-separated list");
  for (const std::string& part : split_csv(text)) {
    if (part.empty()) throw sombor::validation_error("empty entry in --p list");
    try {
      result.probs.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw sombor::validation_error("cannot parse probability: " + part);
    }
    if (!(result.probs.back() >= 0.0)) {
      throw sombor::validation_error("probabilities must be nonnegative");
    }
  }
  for (double p : result.probs) result.input_sum += p;
  if (std::abs(result.input_sum - 1.0) > kCliProbTolerance) {
    throw sombor::validation_error("probabilities sum to " + std::to_string(result.input_sum) +
                                   ", more than 1e-6 away from 1");
  }
  if (result.input_sum != 1.0) {
    for (double& p : result.probs) p /= result.input_sum;
    result.renormalized = true;
  }
  return result;
}

sombor::AttachmentSequence parse_seq(const std::string& text) {
  sombor::AttachmentSequence seq;
  if (text.empty()) return seq;
  for (const std::string& part : split_csv(text)) {
    if (part.empty()) throw sombor::validation_error("empty entry in --seq list");
    try {
      std::size_t used = 0;
      const int t = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      seq.push_back(t);
    } catch (const std::exception&) {
      throw sombor::validation_error("cannot parse attachment type: " + part);
    }
  }
  return seq;
}

std::vector<long long> parse_n_list(const std::string& text) {
  std::vector<long long> ns;
  for (const std::string& part : split_csv(text)) {
    if (part.empty()) throw sombor::validation_error("empty entry in --n list");
    try {
      ns.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw sombor::validation_error("cannot parse chain length: " + part);
    }
  }
  if (ns.empty()) throw sombor::validation_error("--n requires at least one chain length");
  return ns;
}

sombor::SomborVariant parse_variant(const std::string& name, std::optional<double> a) {
  if (name == "general") {
    if (!a) throw sombor::validation_error("--variant general requires --a");
    return sombor::SomborVariant::general(*a);
  }
  if (a) throw sombor::validation_error("--a is only meaningful with --variant general");
  if (name == "plain") return sombor::SomborVariant::plain();
  if (name == "reduced") return sombor::SomborVariant::reduced();
  if (name == "average") return sombor::SomborVariant::average();
  throw sombor::validation_error("unknown variant: " + name +
                                 " (expected plain|reduced|average|general)");
}

int resolve_l(const std::optional<int>& l_flag, const std::string& preset) {
  if (l_flag && !preset.empty()) {
    throw sombor::validation_error("--l and --preset are mutually exclusive");
  }
  if (l_flag) return *l_flag;
  if (!preset.empty()) {
    const auto family = sombor::family_from_name(preset);
    if (!family) {
      throw sombor::validation_error(
          "unknown preset: " + preset +
          " (expected polyonino|pentachain|polyphenyl|cyclooctane)");
    }
    return sombor::family_preset(*family).l;
  }
  throw sombor::validation_error("one of --l or --preset is required");
}

ordered_json payload_header(const char* command) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string verdict_name(sombor::AuditVerdict v) {
  switch (v) {
    case sombor::AuditVerdict::match: return "match";
    case sombor::AuditVerdict::mismatch: return "mismatch";
    case sombor::AuditVerdict::impossible: return "impossible";
  }
  return "unknown";
}

std::string statistic_name(sombor::Statistic s) {
  return s == sombor::Statistic::mean ? "mean" : "variance";
}

std::string parity_name(sombor::Parity p) { return p == sombor::Parity::odd ? "odd" : "even"; }

void append_probs_note(ordered_json& j, const ProbsResult& probs) {
  j["probs"] = probs.probs;
  if (probs.renormalized) {
    j["probs_input_sum"] = probs.input_sum;
    j["probs_renormalized"] = true;
  }
}

std::string plain_probs_note(const ProbsResult& probs, bool full) {
  if (!probs.renormalized) return {};
  return "note: probabilities renormalized from input sum " +
         format_real(probs.input_sum, full) + "\n";
}

// --------------------------------------------------------------------------
// compute

struct ComputeOpts {
  std::optional<int> l;
  std::string preset;
  int n = 1;
  std::string seq_text;
  std::string variant = "plain";
  std::optional<double> a;
  OutputOpts out;
};

void run_compute(const ComputeOpts& opt) {
  const int l = resolve_l(opt.l, opt.preset);
  const sombor::SomborVariant variant = parse_variant(opt.variant, opt.a);
  const sombor::AttachmentSequence seq = parse_seq(opt.seq_text);
  const sombor::ChainGraph g = sombor::build_chain(l, opt.n, seq);
  const sombor::SomborValue value = sombor::sombor_of_graph(g, variant);
  const sombor::EdgeTypeCensus census = sombor::degree_census(g);

  if (opt.out.format == "json") {
    ordered_json j = payload_header("compute");
    j["l"] = l;
    j["n"] = opt.n;
    j["k"] = l / 2;
    j["seq"] = seq;
    j["variant"] = variant.name();
    j["resolved_a"] = value.resolved_a;
    j["value"] = value.value;
    j["census"] = {{"m22", census.m22}, {"m23", census.m23}, {"m33", census.m33}};
    j["vertex_count"] = g.vertex_count;
    j["edge_count"] = g.edge_count();
    emit(j.dump(2) + "\n", opt.out);
  } else if (opt.out.format == "csv") {
    std::string text = "l,n,variant,resolved_a,value,m22,m23,m33\n";
    text += std::to_string(l) + "," + std::to_string(opt.n) + "," + variant.name() + "," +
            format_real(value.resolved_a, opt.out.full_precision) + "," +
            format_real(value.value, opt.out.full_precision) + "," + std::to_string(census.m22) +
            "," + std::to_string(census.m23) + "," + std::to_string(census.m33) + "\n";
    emit(text, opt.out);
  } else {
    std::string text;
    text += "l: " + std::to_string(l) + "\n";
    text += "n: " + std::to_string(opt.n) + "\n";
    text += "variant: " + variant.name() + "\n";
    text += "resolved_a: " + format_real(value.resolved_a, opt.out.full_precision) + "\n";
    text += "value: " + format_real(value.value, opt.out.full_precision) + "\n";
    text += "census: m22=" + std::to_string(census.m22) + " m23=" + std::to_string(census.m23) +
            " m33=" + std::to_string(census.m33) + "\n";
    emit(text, opt.out);
  }
}

// --------------------------------------------------------------------------
// moments

struct MomentsOpts {
  std::optional<int> l;
  std::string preset;
  int n = 2;
  std::string probs_text;
  std::string variant = "plain";
  std::optional<double> a;
  OutputOpts out;
};

void run_moments(const MomentsOpts& opt) {
  const int l = resolve_l(opt.l, opt.preset);
  const sombor::SomborVariant variant = parse_variant(opt.variant, opt.a);
  const ProbsResult probs = parse_probs(opt.probs_text);
  const sombor::ChainSpec spec = sombor::validate_spec({l, opt.n, probs.probs, variant});
  const sombor::MomentSummary moments = sombor::expected_value(spec);
  const sombor::AffineABC abc =
      spec.n >= 2 ? sombor::affine_form(spec)
                  : sombor::increment_constants(spec.l, spec.variant, spec.n).affine;
  const bool has_affine_in_n = variant.kind != sombor::SomborVariant::Kind::average;
  sombor::AffineInN mn;
  if (has_affine_in_n) mn = sombor::moments_affine_in_n(l, probs.probs, variant);
  const char* avr_note =
      "affine-in-n coefficients are undefined for the average variant (its shift depends on n)";

  const bool full = opt.out.full_precision;
  if (opt.out.format == "json") {
    ordered_json j = payload_header("moments");
    j["l"] = l;
    j["n"] = opt.n;
    j["k"] = l / 2;
    append_probs_note(j, probs);
    j["variant"] = variant.name();
    j["resolved_a"] = sombor::resolve_a(variant, l, opt.n);
    j["mean"] = moments.mean;
    j["variance"] = moments.variance;
    j["affine"] = {{"A", abc.A}, {"B", abc.B}, {"C", abc.C}};
    if (has_affine_in_n) {
      j["affine_in_n"] = {{"M", mn.M}, {"N", mn.N}, {"P", mn.P}, {"Q", mn.Q}};
    } else {
      j["affine_in_n_note"] = avr_note;
    }
    emit(j.dump(2) + "\n", opt.out);
  } else if (opt.out.format == "csv") {
    std::string header = "l,n";
    for (std::size_t i = 0; i < probs.probs.size(); ++i) header += ",p" + std::to_string(i + 1);
    header += ",variant,mean,variance,A,B,C";
    header += has_affine_in_n ? ",M,N,P,Q" : ",note";
    std::string row = std::to_string(l) + "," + std::to_string(opt.n);
    for (double p : probs.probs) row += "," + format_real(p, full);
    row += "," + variant.name() + "," + format_real(moments.mean, full) + "," +
           format_real(moments.variance, full) + "," + format_real(abc.A, full) + "," +
           format_real(abc.B, full) + "," + format_real(abc.C, full);
    if (has_affine_in_n) {
      row += "," + format_real(mn.M, full) + "," + format_real(mn.N, full) + "," +
             format_real(mn.P, full) + "," + format_real(mn.Q, full);
    } else {
      row += std::string(",\"") + avr_note + "\"";
    }
    emit(header + "\n" + row + "\n", opt.out);
  } else {
    std::string text = plain_probs_note(probs, full);
    text += "l: " + std::to_string(l) + "\n";
    text += "n: " + std::to_string(opt.n) + "\n";
    text += "variant: " + variant.name() + "\n";
    text += "mean: " + format_real(moments.mean, full) + "\n";
    text += "variance: " + format_real(moments.variance, full) + "\n";
    text += "A: " + format_real(abc.A, full) + "\n";
    text += "B: " + format_real(abc.B, full) + "\n";
    text += "C: " + format_real(abc.C, full) + "\n";
    if (has_affine_in_n) {
      text += "M: " + format_real(mn.M, full) + "\n";
      text += "N: " + format_real(mn.N, full) + "\n";
      text += "P: " + format_real(mn.P, full) + "\n";
      text += "Q: " + format_real(mn.Q, full) + "\n";
    } else {
      text += std::string("note: ") + avr_note + "\n";
    }
    emit(text, opt.out);
  }
}

// --------------------------------------------------------------------------
// enumerate

struct EnumerateOpts {
  std::optional<int> l;
  std::string preset;
  int n = 2;
  std::string probs_text;
  std::string variant = "plain";
  std::optional<double> a;
  unsigned threads = 0;
  OutputOpts out;
};

void run_enumerate(const EnumerateOpts& opt) {
  const int l = resolve_l(opt.l, opt.preset);
  const sombor::SomborVariant variant = parse_variant(opt.variant, opt.a);
  const ProbsResult probs = parse_probs(opt.probs_text);
  const sombor::ChainSpec spec = sombor::validate_spec({l, opt.n, probs.probs, variant});
  const std::uint64_t sequences = sombor::sequence_count(spec);
  const sombor::EnumerationResult result = sombor::enumerate_exact(spec, opt.threads);

  const bool full = opt.out.full_precision;
  if (opt.out.format == "json") {
    ordered_json j = payload_header("enumerate");
    j["l"] = l;
    j["n"] = opt.n;
    append_probs_note(j, probs);
    j["variant"] = variant.name();
    j["sequence_count"] = sequences;
    j["mean"] = result.summary.mean;
    j["variance"] = result.summary.variance;
    ordered_json atoms = ordered_json::array();
    for (const sombor::PmfAtom& a : result.pmf.atoms) {
      atoms.push_back({{"value", a.value}, {"probability", a.probability}});
    }
    j["pmf"] = std::move(atoms);
    emit(j.dump(2) + "\n", opt.out);
  } else if (opt.out.format == "csv") {
    std::string text = "l,n,variant,sequence_count,mean,variance,atoms\n";
    text += std::to_string(l) + "," + std::to_string(opt.n) + "," + variant.name() + "," +
            std::to_string(sequences) + "," + format_real(result.summary.mean, full) + "," +
            format_real(result.summary.variance, full) + "," +
            std::to_string(result.pmf.atoms.size()) + "\n";
    emit(text, opt.out);
  } else {
    std::string text = plain_probs_note(probs, full);
    text += "sequences: " + std::to_string(sequences) + "\n";
    text += "mean: " + format_real(result.summary.mean, full) + "\n";
    text += "variance: " + format_real(result.summary.variance, full) + "\n";
    text += "pmf:\n";
    for (const sombor::PmfAtom& a : result.pmf.atoms) {
      text += "  " + format_real(a.value, full) + " " + format_real(a.probability, full) + "\n";
    }
    emit(text, opt.out);
  }
}

// --------------------------------------------------------------------------
// simulate / normality

struct SimulateOpts {
  std::optional<int> l;
  std::string preset;
  int n = 2;
  std::string probs_text;
  std::string variant = "plain";
  std::optional<double> a;
  long long samples = 10000;
  std::uint64_t seed = 0;
  bool with_ks = false;
  unsigned threads = 0;
  OutputOpts out;
};

void run_simulate(const SimulateOpts& opt, bool normality_mode) {
  const int l = resolve_l(opt.l, opt.preset);
  const sombor::SomborVariant variant = parse_variant(opt.variant, opt.a);
  const ProbsResult probs = parse_probs(opt.probs_text);
  const sombor::ChainSpec spec = sombor::validate_spec({l, opt.n, probs.probs, variant});
  const bool want_ks = normality_mode || opt.with_ks;
  const sombor::SampleStats stats =
      want_ks ? sombor::monte_carlo_with_ks(spec, opt.samples, opt.seed, opt.threads)
              : sombor::monte_carlo(spec, opt.samples, opt.seed, opt.threads);
  const sombor::NormalParams params = sombor::normal_params(spec);

  const bool full = opt.out.full_precision;
  const char* command = normality_mode ? "normality" : "simulate";
  if (opt.out.format == "json") {
    ordered_json j = payload_header(command);
    j["l"] = l;
    j["n"] = opt.n;
    append_probs_note(j, probs);
    j["variant"] = variant.name();
    j["samples"] = stats.sample_count;
    j["seed"] = stats.seed;
    if (normality_mode) {
      j["mu"] = params.mu;
      j["sigma2"] = params.sigma2;
    }
    j["mean"] = stats.mean;
    j["unbiased_variance"] = stats.unbiased_variance;
    j["std_error"] = stats.std_error;
    if (stats.ks_statistic) j["ks_statistic"] = *stats.ks_statistic;
    emit(j.dump(2) + "\n", opt.out);
  } else if (opt.out.format == "csv") {
    std::string header = "l,n,variant,samples,seed,mean,unbiased_variance,std_error";
    std::string row = std::to_string(l) + "," + std::to_string(opt.n) + "," + variant.name() +
                      "," + std::to_string(stats.sample_count) + "," + std::to_string(stats.seed) +
                      "," + format_real(stats.mean, full) + "," +
                      format_real(stats.unbiased_variance, full) + "," +
                      format_real(stats.std_error, full);
    if (normality_mode) {
      header += ",mu,sigma2";
      row += "," + format_real(params.mu, full) + "," + format_real(params.sigma2, full);
    }
    if (stats.ks_statistic) {
      header += ",ks_statistic";
      row += "," + format_real(*stats.ks_statistic, full);
    }
    emit(header + "\n" + row + "\n", opt.out);
  } else {
    std::string text = plain_probs_note(probs, full);
    text += "samples: " + std::to_string(stats.sample_count) + "\n";
    text += "seed: " + std::to_string(stats.seed) + "\n";
    if (normality_mode) {
      text += "mu: " + format_real(params.mu, full) + "\n";
      text += "sigma2: " + format_real(params.sigma2, full) + "\n";
    }
    text += "mean: " + format_real(stats.mean, full) + "\n";
    text += "unbiased_variance: " + format_real(stats.unbiased_variance, full) + "\n";
    text += "std_error: " + format_real(stats.std_error, full) + "\n";
    if (stats.ks_statistic) {
      text += "ks_statistic: " + format_real(*stats.ks_statistic, full) + "\n";
    }
    emit(text, opt.out);
  }
}

// --------------------------------------------------------------------------
// audit

struct AuditOpts {
  std::optional<int> l;
  std::string preset;
  std::string n_text;
  std::string probs_text;
  unsigned threads = 0;
  OutputOpts out;
};

void run_audit(const AuditOpts& opt) {
  const int l = resolve_l(opt.l, opt.preset);
  const ProbsResult probs = parse_probs(opt.probs_text);
  const std::vector<long long> n_list = parse_n_list(opt.n_text);
  sombor::ChainSpec tmpl;
  tmpl.l = l;
  tmpl.n = 2;
  tmpl.probs = probs.probs;
  const std::vector<sombor::DiscrepancyReport> reports =
      sombor::audit(tmpl, n_list, opt.threads);

  const bool full = opt.out.full_precision;
  if (opt.out.format == "json") {
    ordered_json j = payload_header("audit");
    j["l"] = l;
    append_probs_note(j, probs);
    ordered_json rows = ordered_json::array();
    for (const sombor::DiscrepancyReport& r : reports) {
      const sombor::PublishedFormula& info = sombor::published_info(r.formula_id);
      ordered_json row;
      row["formula"] = info.name;
      row["statistic"] = statistic_name(info.statistic);
      row["n"] = r.n;
      row["printed"] = r.printed_value;
      row["derived"] = r.derived_value;
      row["abs_diff"] = r.abs_diff;
      if (r.rel_diff) row["rel_diff"] = *r.rel_diff;
      row["verdict"] = verdict_name(r.verdict);
      rows.push_back(std::move(row));
    }
    j["reports"] = std::move(rows);
    emit(j.dump(2) + "\n", opt.out);
  } else if (opt.out.format == "csv") {
    std::string text = "formula,statistic,n,printed,derived,abs_diff,rel_diff,verdict\n";
    for (const sombor::DiscrepancyReport& r : reports) {
      const sombor::PublishedFormula& info = sombor::published_info(r.formula_id);
      text += std::string(info.name) + "," + statistic_name(info.statistic) + "," +
              std::to_string(r.n) + "," + format_real(r.printed_value, full) + "," +
              format_real(r.derived_value, full) + "," + format_real(r.abs_diff, full) + "," +
              (r.rel_diff ? format_real(*r.rel_diff, full) : std::string()) + "," +
              verdict_name(r.verdict) + "\n";
    }
    emit(text, opt.out);
  } else {
    std::string text = plain_probs_note(probs, full);
    for (const sombor::DiscrepancyReport& r : reports) {
      const sombor::PublishedFormula& info = sombor::published_info(r.formula_id);
      text += std::string(info.name) + " n=" + std::to_string(r.n) +
              " printed=" + format_real(r.printed_value, full) +
              " derived=" + format_real(r.derived_value, full) + " verdict=" +
              verdict_name(r.verdict) + "\n";
    }
    emit(text, opt.out);
  }
}

// --------------------------------------------------------------------------
// table

struct TableOpts {
  int k = 2;
  int n = 2;
  double p1 = 0.5;
  OutputOpts out;
};

struct TableRow {
  std::string index;
  std::string parity;
  std::string statistic;
  double derived;
  double printed;
};

void run_table(const TableOpts& opt) {
  if (opt.k < 2) throw sombor::validation_error("--k must be at least 2");
  if (opt.n < 2) throw sombor::validation_error("--n must be at least 2");
  if (!(opt.p1 >= 0.0 && opt.p1 <= 1.0)) {
    throw sombor::validation_error("--p1 must lie in [0, 1]");
  }

  std::vector<TableRow> rows;
  for (const sombor::PublishedFormula& formula : sombor::published_registry()) {
    const int l = formula.parity == sombor::Parity::odd ? 2 * opt.k + 1 : 2 * opt.k;
    std::vector<double> probs(static_cast<std::size_t>(l / 2),
                              l / 2 > 1 ? (1.0 - opt.p1) / (l / 2 - 1) : 0.0);
    probs[0] = opt.p1;
    const sombor::ChainSpec spec = sombor::validate_spec({l, opt.n, probs, formula.variant});
    const double derived = formula.statistic == sombor::Statistic::mean
                               ? sombor::expected_value(spec).mean
                               : sombor::variance(spec).variance;
    const double printed = sombor::published_formula(formula.id, opt.k, opt.n, opt.p1);
    std::string index = formula.variant.kind == sombor::SomborVariant::Kind::plain ? "so"
                        : formula.variant.kind == sombor::SomborVariant::Kind::reduced
                            ? "so_red"
                            : "so_avr";
    rows.push_back({std::move(index), parity_name(formula.parity),
                    statistic_name(formula.statistic), derived, printed});
  }

  const bool full = opt.out.full_precision;
  if (opt.out.format == "json") {
    ordered_json j = payload_header("table");
    j["k"] = opt.k;
    j["n"] = opt.n;
    j["p1"] = opt.p1;
    ordered_json out_rows = ordered_json::array();
    for (const TableRow& r : rows) {
      out_rows.push_back({{"index", r.index},
                          {"parity", r.parity},
                          {"statistic", r.statistic},
                          {"derived", r.derived},
                          {"printed", r.printed}});
    }
    j["rows"] = std::move(out_rows);
    emit(j.dump(2) + "\n", opt.out);
  } else if (opt.out.format == "csv") {
    std::string text = "index,parity,statistic,derived,printed\n";
    for (const TableRow& r : rows) {
      text += r.index + "," + r.parity + "," + r.statistic + "," + format_real(r.derived, full) +
              "," + format_real(r.printed, full) + "\n";
    }
    emit(text, opt.out);
  } else {
    std::string text = "k=" + std::to_string(opt.k) + " n=" + std::to_string(opt.n) +
                       " p1=" + format_real(opt.p1, full) + "\n";
    for (const TableRow& r : rows) {
      text += r.index + "(" + r.parity + ") " + r.statistic +
              ": derived=" + format_real(r.derived, full) +
              " printed=" + format_real(r.printed, full) + "\n";
    }
    emit(text, opt.out);
  }
}

void add_output_options(CLI::App* cmd, OutputOpts* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", out->output_path, "Write output to a file instead of stdout");
  cmd->add_flag("--full-precision", out->full_precision,
                "Print reals with shortest round-trip precision (default: 9 significant digits; "
                "JSON always uses full precision)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sombor indices of random polygonal chains: exact values, closed-form moments, "
               "an exhaustive-enumeration oracle, seeded Monte Carlo, and an audit of the "
               "published constants."};
  app.require_subcommand(1);

  ComputeOpts compute_opts;
  CLI::App* compute = app.add_subcommand("compute", "Index value of one explicit chain");
  compute->add_option("--l", compute_opts.l, "Polygon size (vertices per cycle)");
  compute->add_option("--preset", compute_opts.preset,
                      "Chain family: polyonino|pentachain|polyphenyl|cyclooctane");
  compute->add_option("--n", compute_opts.n, "Number of polygons")->required();
  compute->add_option("--seq", compute_opts.seq_text,
                      "Comma-separated attachment types t3..tn (empty for n <= 2)");
  compute->add_option("--variant", compute_opts.variant, "plain|reduced|average|general")
      ->capture_default_str();
  compute->add_option("--a", compute_opts.a, "Shift for --variant general");
  add_output_options(compute, &compute_opts.out);
  compute->callback([&] { run_compute(compute_opts); });

  MomentsOpts moments_opts;
  CLI::App* moments = app.add_subcommand("moments", "Closed-form mean, variance and affine "
                                                    "coefficients");
  moments->add_option("--l", moments_opts.l, "Polygon size");
  moments->add_option("--preset", moments_opts.preset, "Chain family");
  moments->add_option("--n", moments_opts.n, "Number of polygons")->required();
  moments->add_option("--p", moments_opts.probs_text, "Comma-separated attachment probabilities")
      ->required();
  moments->add_option("--variant", moments_opts.variant, "plain|reduced|average|general")
      ->capture_default_str();
  moments->add_option("--a", moments_opts.a, "Shift for --variant general");
  add_output_options(moments, &moments_opts.out);
  moments->callback([&] { run_moments(moments_opts); });

  EnumerateOpts enum_opts;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Exact moments and pmf by exhaustive "
                                                        "enumeration");
  enumerate->add_option("--l", enum_opts.l, "Polygon size");
  enumerate->add_option("--preset", enum_opts.preset, "Chain family");
  enumerate->add_option("--n", enum_opts.n, "Number of polygons")->required();
  enumerate->add_option("--p", enum_opts.probs_text, "Attachment probabilities")->required();
  enumerate->add_option("--variant", enum_opts.variant, "plain|reduced|average|general")
      ->capture_default_str();
  enumerate->add_option("--a", enum_opts.a, "Shift for --variant general");
  enumerate->add_option("--threads", enum_opts.threads,
                        "Worker threads (0 = all available, or SOMBORCHAIN_THREADS)");
  add_output_options(enumerate, &enum_opts.out);
  enumerate->callback([&] {
    if (enum_opts.threads == 0) enum_opts.threads = default_threads();
    run_enumerate(enum_opts);
  });

  SimulateOpts sim_opts;
  CLI::App* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo sample moments");
  simulate->add_option("--l", sim_opts.l, "Polygon size");
  simulate->add_option("--preset", sim_opts.preset, "Chain family");
  simulate->add_option("--n", sim_opts.n, "Number of polygons")->required();
  simulate->add_option("--p", sim_opts.probs_text, "Attachment probabilities")->required();
  simulate->add_option("--variant", sim_opts.variant, "plain|reduced|average|general")
      ->capture_default_str();
  simulate->add_option("--a", sim_opts.a, "Shift for --variant general");
  simulate->add_option("--samples", sim_opts.samples, "Number of sampled chains")
      ->capture_default_str();
  simulate->add_option("--seed", sim_opts.seed, "RNG seed")->capture_default_str();
  simulate->add_flag("--ks", sim_opts.with_ks,
                     "Also report the KS statistic against the closed-form normal parameters");
  simulate->add_option("--threads", sim_opts.threads, "Worker threads (0 = all available)");
  add_output_options(simulate, &sim_opts.out);
  simulate->callback([&] {
    if (sim_opts.threads == 0) sim_opts.threads = default_threads();
    run_simulate(sim_opts, false);
  });

  SimulateOpts norm_opts;
  CLI::App* normality = app.add_subcommand("normality", "KS statistic of a seeded sample against "
                                                        "the closed-form normal parameters");
  normality->add_option("--l", norm_opts.l, "Polygon size");
  normality->add_option("--preset", norm_opts.preset, "Chain family");
  normality->add_option("--n", norm_opts.n, "Number of polygons")->required();
  normality->add_option("--p", norm_opts.probs_text, "Attachment probabilities")->required();
  normality->add_option("--variant", norm_opts.variant, "plain|reduced|average|general")
      ->capture_default_str();
  normality->add_option("--a", norm_opts.a, "Shift for --variant general");
  normality->add_option("--samples", norm_opts.samples, "Number of sampled chains")
      ->capture_default_str();
  normality->add_option("--seed", norm_opts.seed, "RNG seed")->capture_default_str();
  normality->add_option("--threads", norm_opts.threads, "Worker threads (0 = all available)");
  add_output_options(normality, &norm_opts.out);
  normality->callback([&] {
    if (norm_opts.threads == 0) norm_opts.threads = default_threads();
    run_simulate(norm_opts, true);
  });

  AuditOpts audit_opts;
  CLI::App* audit_cmd = app.add_subcommand("audit", "Compare published formulas against exact "
                                                    "values (findings are not failures)");
  audit_cmd->add_option("--l", audit_opts.l, "Polygon size");
  audit_cmd->add_option("--preset", audit_opts.preset, "Chain family");
  audit_cmd->add_option("--n", audit_opts.n_text, "Comma-separated chain lengths")->required();
  audit_cmd->add_option("--p", audit_opts.probs_text, "Attachment probabilities")->required();
  audit_cmd->add_option("--threads", audit_opts.threads, "Worker threads (0 = all available)");
  add_output_options(audit_cmd, &audit_opts.out);
  audit_cmd->callback([&] {
    if (audit_opts.threads == 0) audit_opts.threads = default_threads();
    run_audit(audit_opts);
  });

  TableOpts table_opts;
  CLI::App* table = app.add_subcommand("table", "Normal-approximation parameter table, derived "
                                                "next to published values, for both parities");
  table->add_option("--k", table_opts.k, "Parity parameter: rows cover l=2k+1 and l=2k")
      ->required();
  table->add_option("--n", table_opts.n, "Number of polygons")->required();
  table->add_option("--p1", table_opts.p1, "Probability of the type-1 attachment")->required();
  add_output_options(table, &table_opts.out);
  table->callback([&] { run_table(table_opts); });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const sombor::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sombor::guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
