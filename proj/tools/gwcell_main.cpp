// Command-line front end over the gwcell C interface.

#include "gwcell.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kMissingKeys = 3, kInternal = 4 };

int exit_code(gwcell_status st) {
  switch (st) {
    case GWCELL_OK:
      return kOk;
    case GWCELL_ERR_INVALID_ARGUMENT:
    case GWCELL_ERR_DOMAIN:
      return kUsage;
    case GWCELL_ERR_VERIFICATION:
      return kVerification;
    case GWCELL_ERR_MISSING_KEYS:
      return kMissingKeys;
    case GWCELL_ERR_INTERNAL:
      break;
  }
  return kInternal;
}

gwcell_format parse_format(const std::string& s) { return s == "text" ? GWCELL_FORMAT_TEXT : GWCELL_FORMAT_JSON; }

int run(const std::function<gwcell_status(gwcell_context*, char**)>& call) {
  gwcell_context* ctx = nullptr;
  if (gwcell_context_create(&ctx) != GWCELL_OK) {
    std::fputs("gwcell: cannot create context\n", stderr);
    return kInternal;
  }
  char* out = nullptr;
  const gwcell_status st = call(ctx, &out);
  if (out) {
    std::fputs(out, stdout);
    gwcell_string_free(out);
  }
  if (st != GWCELL_OK) {
    const char* msg = gwcell_last_error(ctx);
    std::fprintf(stderr, "gwcell: %s\n", *msg ? msg : gwcell_status_string(st));
  }
  gwcell_context_destroy(ctx);
  return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular decompositions of Grothendieck-Witt groups of Grassmannians"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  if (const char* env = std::getenv("GWCELL_FORMAT")) format = env;
  app.add_option("--format", format, "Output format (env GWCELL_FORMAT)")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  int d = 0, m = 0, r = 0, parity = 0;
  long long shift = 0, degree = 0;
  std::string twist = "both", mode = "formal", bundle = "trivial", table, render = "json";
  bool even_only = false, no_split = false;
  int max = 0, d_max = 0, m_max = 0;

  auto* gr = app.add_subcommand("grassmann", "Decompose GW of Gr_d(E), rank E = d + m");
  gr->add_option("-d", d, "Subbundle rank")->required()->check(CLI::NonNegativeNumber);
  gr->add_option("-m", m, "Quotient rank")->required()->check(CLI::NonNegativeNumber);
  gr->add_option("--shift,-n", shift, "Shift n of GW^[n]");
  gr->add_option("--twist", twist, "even, odd, both, or a generator list like L,Delta")->capture_default_str();
  gr->add_option("--mode", mode, "formal, witt or eval")
      ->check(CLI::IsMember({"formal", "witt", "eval"}))
      ->capture_default_str();
  gr->add_option("--bundle", bundle, "trivial or flagged")
      ->check(CLI::IsMember({"trivial", "flagged"}))
      ->capture_default_str();
  gr->add_option("--base-table", table, "Base-theory JSON table for eval mode");
  gr->add_option("--degree", degree, "Degree for eval mode");

  auto* pb = app.add_subcommand("projective-bundle", "Decompose GW of P(E), rank E = r + 1");
  pb->add_option("-r", r, "Fibre dimension")->required()->check(CLI::NonNegativeNumber);
  pb->add_option("--twist-parity", parity, "0 or 1")->check(CLI::IsMember({0, 1}));
  pb->add_option("--shift,-n", shift, "Shift");
  pb->add_flag("--no-split", no_split, "E does not split off a line bundle");

  auto* yg = app.add_subcommand("young", "List Young diagrams in a d x m frame");
  yg->add_option("-d", d, "Rows")->required()->check(CLI::NonNegativeNumber);
  yg->add_option("-m", m, "Columns")->required()->check(CLI::NonNegativeNumber);
  yg->add_flag("--even", even_only, "Only even diagrams");
  yg->add_option("--render", render, "json or ascii")->check(CLI::IsMember({"json", "ascii"}))->capture_default_str();

  auto* ls = app.add_subcommand("les", "Exact sequence of P(E) for odd r, even twist");
  ls->add_option("-r", r, "Fibre dimension (odd)")->required();
  ls->add_option("--shift,-n", shift, "Shift");

  auto* vf = app.add_subcommand("verify", "Run the verification suite");
  vf->add_option("--max", max, "Sweep bound for both d and m")->check(CLI::PositiveNumber);
  vf->add_option("--d-max", d_max, "Sweep bound for d")->check(CLI::PositiveNumber);
  vf->add_option("--m-max", m_max, "Sweep bound for m")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (format != "json" && format != "text") {
    std::fprintf(stderr, "gwcell: unknown format '%s'\n", format.c_str());
    return kUsage;
  }
  const gwcell_format fmt = parse_format(format);

  if (*gr) {
    return run([&](gwcell_context* c, char** out) {
      return gwcell_grassmann(c, d, m, shift, twist.c_str(), mode.c_str(), bundle.c_str(),
                              table.empty() ? nullptr : table.c_str(), degree, fmt, out);
    });
  }
  if (*pb) {
    return run([&](gwcell_context* c, char** out) {
      return gwcell_projective_bundle(c, r, parity, shift, no_split ? 0 : 1, fmt, out);
    });
  }
  if (*yg) {
    return run([&](gwcell_context* c, char** out) {
      return gwcell_young(c, d, m, even_only ? 1 : 0, render.c_str(), out);
    });
  }
  if (*ls) {
    return run([&](gwcell_context* c, char** out) { return gwcell_les(c, r, shift, fmt, out); });
  }
  const int dm = d_max > 0 ? d_max : (max > 0 ? max : 6);
  const int mm = m_max > 0 ? m_max : (max > 0 ? max : 6);
  return run([&](gwcell_context* c, char** out) { return gwcell_verify(c, dm, mm, fmt, out); });
}
