// jsub: command-line surface over the substitution-group library.
//
// Exit codes: 0 success, 1 usage/parse errors, 2 domain errors (violated
// preconditions, missing ring capabilities).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jsub/bench.hpp"
#include "jsub/endo.hpp"
#include "jsub/group.hpp"
#include "jsub/series.hpp"
#include "jsub/verify.hpp"
#include "jsub/witt.hpp"

namespace {

using json = nlohmann::json;
using namespace jsub;

struct Options {
  std::string ring_selector = "int";
  std::optional<std::size_t> prec;
  unsigned s = 0;
  long k = 0;
  std::string t;
  std::string p;
  unsigned j = 1;
  bool list = false;
  bool structured = false;
  std::vector<std::string> operands;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Ring ring_of(const Options& opt) { return Ring::parse_selector(opt.ring_selector); }

// Precision is mandatory unless every series operand is a bracketed list,
// whose length already names the quotient the series lives in.
std::size_t operand_precision(const Options& opt, const std::string& text) {
  auto len = list_literal_length(text);
  if (opt.prec) {
    if (len && *len != *opt.prec)
      throw UsageError("bracketed literal names precision " +
                       std::to_string(*len) + " but --prec says " +
                       std::to_string(*opt.prec));
    return *opt.prec;
  }
  if (len) return *len;
  throw UsageError("--prec is required unless the operand is a bracketed "
                   "coefficient list");
}

Series series_operand(const Options& opt, std::size_t index) {
  const std::string& text = opt.operands.at(index);
  return parse_series(text, ring_of(opt), operand_precision(opt, text));
}

VectorField field_operand(const Options& opt, std::size_t index) {
  const std::string& text = opt.operands.at(index);
  return parse_field(text, ring_of(opt), operand_precision(opt, text));
}

void require_operands(const Options& opt, std::size_t count) {
  if (opt.operands.size() != count)
    throw UsageError("expected " + std::to_string(count) + " operand" +
                     (count == 1 ? "" : "s") + ", got " +
                     std::to_string(opt.operands.size()));
}

json series_record(const Series& f) {
  json coeffs = json::array();
  for (std::size_t i = 1; i <= f.precision(); ++i)
    coeffs.push_back(f.ring().format(f.coeff(i)));
  return json{{"ring", f.ring().selector()},
              {"precision", f.precision()},
              {"coeffs", coeffs}};
}

json field_record(const VectorField& v) {
  json comps = json::array();
  for (std::size_t n = 1; n <= v.degree_bound(); ++n)
    comps.push_back(v.ring().format(v.component(n)));
  return json{{"ring", v.ring().selector()},
              {"degree_bound", v.degree_bound()},
              {"components", comps}};
}

void print_series(const Options& opt, const std::string& verb,
                  const Series& f) {
  if (opt.structured) {
    json rec = series_record(f);
    rec["verb"] = verb;
    std::cout << rec.dump() << "\n";
  } else if (opt.list) {
    std::cout << format_series_list(f) << "\n";
  } else {
    std::cout << format_series(f) << " (mod x^" << f.precision() + 2 << ")\n";
  }
}

void print_field(const Options& opt, const std::string& verb,
                 const VectorField& v) {
  if (opt.structured) {
    json rec = field_record(v);
    rec["verb"] = verb;
    std::cout << rec.dump() << "\n";
  } else if (opt.list) {
    std::cout << format_field_list(v) << "\n";
  } else {
    std::cout << format_field(v) << "\n";
  }
}

int run_verb(const std::string& verb, const Options& opt,
             const std::vector<std::size_t>& bench_sizes,
             const std::vector<std::string>& bench_kernels,
             const std::string& verify_suite) {
  if (verb == "compose") {
    require_operands(opt, 2);
    print_series(opt, verb, compose(series_operand(opt, 0), series_operand(opt, 1)));
  } else if (verb == "invert") {
    require_operands(opt, 1);
    print_series(opt, verb, invert(series_operand(opt, 0)));
  } else if (verb == "power") {
    require_operands(opt, 1);
    print_series(opt, verb, power(series_operand(opt, 0), opt.k));
  } else if (verb == "commutator") {
    require_operands(opt, 2);
    print_series(opt, verb,
                 commutator(series_operand(opt, 0), series_operand(opt, 1)));
  } else if (verb == "conjugate") {
    require_operands(opt, 2);
    print_series(opt, verb,
                 conjugate(series_operand(opt, 0), series_operand(opt, 1)));
  } else if (verb == "depth") {
    require_operands(opt, 1);
    Depth d = depth(series_operand(opt, 0));
    if (opt.structured)
      std::cout << json{{"verb", "depth"}, {"n", d.n}, {"saturated", d.saturated}}
                       .dump()
                << "\n";
    else
      std::cout << "depth=" << d.n << " saturated="
                << (d.saturated ? "true" : "false") << "\n";
  } else if (verb == "project") {
    require_operands(opt, 1);
    if (opt.k < 0) throw UsageError("projection level --k must be >= 0");
    print_series(opt, verb,
                 project(series_operand(opt, 0), static_cast<std::size_t>(opt.k)));
  } else if (verb == "dilate") {
    require_operands(opt, 1);
    if (opt.t.empty()) throw UsageError("dilate needs --t <ring-literal>");
    Ring ring = ring_of(opt);
    print_series(opt, verb, dilate(series_operand(opt, 0), ring.parse(opt.t)));
  } else if (verb == "compress") {
    require_operands(opt, 1);
    print_series(opt, verb, compress(series_operand(opt, 0), opt.s));
  } else if (verb == "decompress") {
    require_operands(opt, 1);
    print_series(opt, verb, decompress(series_operand(opt, 0), opt.s));
  } else if (verb == "theta") {
    require_operands(opt, 1);
    print_series(opt, verb, theta_only(series_operand(opt, 0), opt.s));
  } else if (verb == "root") {
    require_operands(opt, 1);
    if (opt.k < 1) throw UsageError("root needs --k >= 1");
    print_series(opt, verb,
                 kth_root(series_operand(opt, 0), static_cast<unsigned>(opt.k)));
  } else if (verb == "exp") {
    require_operands(opt, 1);
    print_series(opt, verb, exp_field(field_operand(opt, 0)));
  } else if (verb == "log") {
    require_operands(opt, 1);
    print_field(opt, verb, log_series(series_operand(opt, 0)));
  } else if (verb == "bracket") {
    require_operands(opt, 2);
    print_field(opt, verb,
                witt_bracket(field_operand(opt, 0), field_operand(opt, 1)));
  } else if (verb == "theta-star") {
    require_operands(opt, 1);
    print_field(opt, verb, theta_star(field_operand(opt, 0), opt.s));
  } else if (verb == "enumerate") {
    require_operands(opt, 0);
    if (!opt.prec) throw UsageError("enumerate needs --prec (the level m)");
    std::vector<Series> all = enumerate_quotient(ring_of(opt), *opt.prec);
    if (opt.structured) {
      json elems = json::array();
      for (const Series& f : all) elems.push_back(format_series_list(f));
      std::cout << json{{"verb", "enumerate"},
                        {"ring", ring_of(opt).selector()},
                        {"precision", *opt.prec},
                        {"count", all.size()},
                        {"elements", elems}}
                       .dump()
                << "\n";
    } else {
      for (const Series& f : all) std::cout << format_series_list(f) << "\n";
    }
  } else if (verb == "order") {
    require_operands(opt, 1);
    auto ord = element_order(series_operand(opt, 0),
                             opt.k > 0 ? static_cast<unsigned long>(opt.k) : 0);
    if (opt.structured) {
      json rec{{"verb", "order"}};
      if (ord)
        rec["order"] = *ord;
      else
        rec["order"] = nullptr;
      std::cout << rec.dump() << "\n";
    } else {
      if (ord)
        std::cout << "order=" << *ord << "\n";
      else
        std::cout << "order=unknown (iteration cap reached)\n";
    }
  } else if (verb == "separate") {
    require_operands(opt, 1);
    if (opt.p.empty()) throw UsageError("separate needs --p <prime>");
    Series f = series_operand(opt, 0);
    QuotientWitness w = separating_quotient(f, Int(opt.p));
    if (opt.structured) {
      json rec = {{"verb", "separate"},
                  {"p", w.p.get_str()},
                  {"j", w.j},
                  {"m", w.m},
                  {"image", series_record(w.image)}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << format_witness(w) << "\n";
    }
  } else if (verb == "verify") {
    std::vector<const Suite*> to_run;
    if (verify_suite == "all") {
      for (const Suite& s : all_suites()) to_run.push_back(&s);
    } else {
      const Suite* s = find_suite(verify_suite);
      if (!s) throw UsageError("unknown suite '" + verify_suite + "'");
      to_run.push_back(s);
    }
    bool all_passed = true;
    json results = json::array();
    for (const Suite* s : to_run) {
      SuiteResult r = s->run();
      all_passed = all_passed && r.passed;
      if (opt.structured)
        results.push_back(json{{"name", r.name},
                               {"criterion", s->criterion},
                               {"passed", r.passed},
                               {"checks", r.checks},
                               {"detail", r.detail}});
      else
        std::cout << format_result_line(r, s->criterion) << "\n";
    }
    if (opt.structured)
      std::cout << json{{"verb", "verify"}, {"suites", results}}.dump() << "\n";
    else
      std::cout << (all_passed ? "all suites passed" : "some suites FAILED")
                << "\n";
    return all_passed ? 0 : 2;
  } else if (verb == "bench") {
    std::vector<ComposeKernel> kernels;
    for (const std::string& name : bench_kernels)
      kernels.push_back(parse_kernel(name));
    if (kernels.empty())
      kernels = {ComposeKernel::Horner, ComposeKernel::PowerTable};
    std::vector<std::size_t> sizes = bench_sizes;
    if (sizes.empty()) sizes = {16, 64, 256};
    std::cout << bench_csv(run_bench(sizes, ring_of(opt), kernels));
  } else {
    throw UsageError("unknown verb '" + verb + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the substitution group of formal power "
               "series x + a1 x^2 + a2 x^3 + ... over a chosen coefficient "
               "ring"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::size_t> bench_sizes;
  std::vector<std::string> bench_kernels;
  std::string verify_suite = "all";

  const std::vector<std::string> verbs = {
      "compose", "invert",  "power",     "commutator", "conjugate", "depth",
      "project", "dilate",  "compress",  "decompress", "theta",     "root",
      "exp",     "log",     "bracket",   "theta-star", "enumerate", "order",
      "separate", "verify", "bench"};

  for (const std::string& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb);
    sub->add_option("--ring", opt.ring_selector,
                    "coefficient ring: int, rat, mod:<n>, padic:<p>:<N>, erdos");
    sub->add_option("--prec", opt.prec, "precision m (the quotient level)");
    sub->add_option("--s", opt.s, "compression coefficient");
    sub->add_option("--k", opt.k, "integer argument (exponent, root index, "
                                  "projection level, iteration cap)");
    sub->add_option("--t", opt.t, "dilation parameter (ring literal)");
    sub->add_option("--p", opt.p, "prime for finite quotients");
    sub->add_option("--j", opt.j, "prime power exponent");
    sub->add_flag("--list", opt.list, "render series as coefficient lists");
    sub->add_flag("--structured", opt.structured,
                  "one self-describing JSON record on stdout");
    sub->add_option("operands", opt.operands, "series / field / scalar literals");
    if (verb == "bench") {
      sub->add_option("--sizes", bench_sizes, "precisions to time");
      sub->add_option("--kernels", bench_kernels,
                      "kernels to time (horner, power-table)");
    }
    if (verb == "verify")
      sub->add_option("--suite", verify_suite, "suite name or 'all'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints usage or help text
    return code == 0 ? 0 : 1;
  }

  try {
    return run_verb(app.get_subcommands().front()->get_name(), opt,
                    bench_sizes, bench_kernels, verify_suite);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
}
