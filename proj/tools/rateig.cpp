// rateig: identity suites, single spectra and exhaustive theorem checks.
//
// Exit status: 0 when every result matches, 1 on a mismatch or failed
// identity, 2 on invalid options or input.

#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "rateig/classify.hpp"
#include "rateig/error.hpp"
#include "rateig/lemma_suite.hpp"
#include "rateig/report.hpp"
#include "rateig/spectra.hpp"
#include "rateig/syntax.hpp"

namespace {

using namespace rateig;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalid = 2;

constexpr const char* kElementHelp =
    "element as fam:dim:terms, e.g. a:8:phi(5)+phi(3)*2 or b:11:phi(5)+phi(9)+1";
constexpr const char* kWeightHelp =
    "weight: fund:i, sum:i,j, spin (family b), products joined by '&' (fund:1&spin), "
    "or omega:a1,...,an (with --criterion si-delta)";

struct LemmaOpts {
  std::uint32_t max_m = 45;
  std::string format = "text";
};

struct SpectrumOpts {
  std::string element;
  std::string weight;
  std::uint32_t p = 0;
  std::string criterion = "spectrum";
  std::string format = "text";
};

struct ClassifyOpts {
  std::string theorem;
  std::string ranks;
  std::uint32_t max_order = 45;
  std::optional<std::uint32_t> p;
  unsigned jobs = 0;
  std::string format = "text";
  bool no_wall_time = false;
};

int run_lemmas(const LemmaOpts& o) {
  const LemmaReport r = run_lemma_suite(o.max_m);
  std::cout << (o.format == "json" ? to_json(r) : to_text(r));
  return r.passed() ? kOk : kMismatch;
}

int run_spectrum(const SpectrumOpts& o) {
  const SemisimpleElement g = parse_element(o.element);
  const WeightInput w = parse_weight(o.weight, g.group());
  const std::string weight = format_weight(w, g.group());
  const bool json = o.format == "json";

  if (o.criterion == "si-delta") {
    if (g.group().family != Family::C || o.p != 2) {
      throw Error(ErrorCode::Unsupported, "--criterion si-delta needs a family c element and -p 2");
    }
    Si2Printout out{format_element(g), weight, si(g), 0, false};
    if (const auto* c = std::get_if<CoefficientWeight>(&w)) {
      const std::span<const std::uint32_t> a(c->a);
      out.delta = delta_nu(a.first(a.size() - 1));
      out.has_one = !sp2_eig1_absent(g, a);
    } else {
      const Shape& shape = std::get<Shape>(w);
      for (const auto& a : factor_coefficients(shape, g.group().n)) {
        out.delta += delta_nu(std::span<const std::uint32_t>(a).first(a.size() - 1));
      }
      out.has_one = !sp2_eig1_absent(g, shape);
    }
    std::cout << (json ? to_json(out) : to_text(out));
    return kOk;
  }

  const auto* shape = std::get_if<Shape>(&w);
  if (shape == nullptr) {
    throw Error(ErrorCode::Unsupported, "coefficient weight " + weight +
                                            " needs --criterion si-delta");
  }
  try {
    const SpectrumPrintout out{format_element(g), weight, o.p, spectrum_of(g, *shape, o.p)};
    std::cout << (json ? to_json(out) : to_text(out));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Unsupported && g.group().family == Family::C && o.p == 2) {
      throw Error(ErrorCode::Unsupported, std::string(e.what()) +
                                              "; use --criterion si-delta for p = 2");
    }
    throw;
  }
  return kOk;
}

int run_classify(const ClassifyOpts& o) {
  const auto id = parse_theorem(o.theorem);
  if (!id) throw Error(ErrorCode::ParseError, "unknown theorem '" + o.theorem + "'");
  Bounds b = default_bounds(*id);
  if (!o.ranks.empty()) std::tie(b.rank_lo, b.rank_hi) = parse_range(o.ranks);
  b.max_order = o.max_order;
  if (o.p) b.p = *o.p;
  validate_bounds(*id, b);
  const unsigned jobs = o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  VerificationReport r = verify(*id, b, jobs);
  if (o.no_wall_time) r.wall_time.reset();
  std::cout << (o.format == "json" ? to_json(r) : to_text(r));
  return r.passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue 1 of rational odd-order elements in classical groups"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  LemmaOpts lemma;
  CLI::App* lemmas = app.add_subcommand("lemmas", "check the root-of-unity identities");
  lemmas->add_option("--max-m", lemma.max_m, "odd bound on m")->capture_default_str();
  lemmas->add_option("--format", lemma.format)->check(CLI::IsMember(formats))->capture_default_str();

  SpectrumOpts sopts;
  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of one element on one module");
  spectrum->add_option("-e,--element", sopts.element, kElementHelp)->required();
  spectrum->add_option("-w,--weight", sopts.weight, kWeightHelp)->required();
  spectrum->add_option("-p,--p", sopts.p, "characteristic, 0 or a prime")->capture_default_str();
  spectrum->add_option("--criterion", sopts.criterion, "spectrum, or si-delta for family c at p = 2")
      ->check(CLI::IsMember({"spectrum", "si-delta"}))
      ->capture_default_str();
  spectrum->add_option("--format", sopts.format)->check(CLI::IsMember(formats))->capture_default_str();

  ClassifyOpts cls;
  std::string theorem_list;
  for (TheoremId id : all_theorems()) {
    theorem_list += (theorem_list.empty() ? "" : ", ") + std::string(theorem_name(id));
  }
  CLI::App* classify = app.add_subcommand("classify", "verify a theorem over a window");
  classify->add_option("--theorem", cls.theorem, theorem_list)->required();
  classify->add_option("--ranks", cls.ranks, "rank range a..b (default per theorem)");
  classify->add_option("--max-order", cls.max_order, "odd bound on orbit orders")
      ->capture_default_str();
  classify->add_option("-p,--p", cls.p, "characteristic (default 0, or 2 for char2 theorems)");
  classify->add_option("--jobs", cls.jobs, "worker threads (default: hardware threads)")
      ->envname("RATEIG_JOBS");
  classify->add_option("--format", cls.format)->check(CLI::IsMember(formats))->capture_default_str();
  classify->add_flag("--no-wall-time", cls.no_wall_time, "omit timing for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (lemmas->parsed()) return run_lemmas(lemma);
    if (spectrum->parsed()) return run_spectrum(sopts);
    return run_classify(cls);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
