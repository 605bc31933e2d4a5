#include "gwcell.h"

#include "gwcell/engine.hpp"
#include "gwcell/errors.hpp"
#include "gwcell/io.hpp"
#include "gwcell/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <string>

struct gwcell_context {
  gwcell::Engine engine;
  mutable std::mutex error_mutex;
  std::string last_error;

  void set_error(std::string msg) {
    std::lock_guard lock(error_mutex);
    last_error = std::move(msg);
  }
};

namespace {

using gwcell::json;

class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

char* dup_string(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string arg(const char* s, const char* fallback) { return s ? std::string(s) : std::string(fallback); }

/// Runs body, maps exceptions to status codes, and stores the produced string.
template <typename Body>
gwcell_status guarded(gwcell_context* ctx, char** out, Body&& body) {
  if (!ctx || !out) {
    if (ctx) ctx->set_error("null output pointer");
    return GWCELL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    std::string text;
    const gwcell_status st = body(text);
    *out = dup_string(text);
    ctx->set_error(st == GWCELL_OK ? std::string() : std::string("verification failed"));
    return st;
  } catch (const gwcell::MissingKeysError& e) {
    ctx->set_error(e.what());
    return GWCELL_ERR_MISSING_KEYS;
  } catch (const gwcell::DomainError& e) {
    ctx->set_error(e.what());
    return GWCELL_ERR_DOMAIN;
  } catch (const InvalidArgument& e) {
    ctx->set_error(e.what());
    return GWCELL_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    ctx->set_error(std::string("internal error: ") + e.what());
    return GWCELL_ERR_INTERNAL;
  } catch (...) {
    ctx->set_error("internal error");
    return GWCELL_ERR_INTERNAL;
  }
}

gwcell::BundleKind parse_bundle(const std::string& s) {
  if (s == "trivial") return gwcell::BundleKind::Trivial;
  if (s == "flagged") return gwcell::BundleKind::FlaggedSymbolic;
  throw InvalidArgument("bundle must be 'trivial' or 'flagged', got '" + s + "'");
}

void check_format(gwcell_format f) {
  if (f != GWCELL_FORMAT_JSON && f != GWCELL_FORMAT_TEXT) throw InvalidArgument("unknown output format");
}

}  // namespace

extern "C" {

gwcell_status gwcell_context_create(gwcell_context** out) {
  if (!out) return GWCELL_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) gwcell_context();
  return *out ? GWCELL_OK : GWCELL_ERR_INTERNAL;
}

void gwcell_context_destroy(gwcell_context* ctx) { delete ctx; }

const char* gwcell_last_error(const gwcell_context* ctx) {
  if (!ctx) return "";
  std::lock_guard lock(ctx->error_mutex);
  return ctx->last_error.c_str();
}

const char* gwcell_status_string(gwcell_status status) {
  switch (status) {
    case GWCELL_OK:
      return "ok";
    case GWCELL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case GWCELL_ERR_DOMAIN:
      return "domain error";
    case GWCELL_ERR_MISSING_KEYS:
      return "missing base-theory keys";
    case GWCELL_ERR_VERIFICATION:
      return "verification failed";
    case GWCELL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void gwcell_string_free(char* s) { std::free(s); }

gwcell_status gwcell_grassmann(gwcell_context* ctx, int d, int m, int64_t shift, const char* twist,
                               const char* mode, const char* bundle, const char* base_table_path, int64_t degree,
                               gwcell_format format, char** out) {
  return guarded(ctx, out, [&](std::string& text) {
    check_format(format);
    const std::string twist_s = arg(twist, "both");
    const std::string mode_s = arg(mode, "formal");
    const gwcell::BundleKind kind = parse_bundle(arg(bundle, "trivial"));
    if (mode_s != "formal" && mode_s != "witt" && mode_s != "eval")
      throw InvalidArgument("mode must be formal, witt or eval, got '" + mode_s + "'");

    const gwcell::PicClass l = gwcell::PicClass::of(gwcell::PicGenerator::base("L"));
    gwcell::FormalSum sum;
    if (twist_s == "both") {
      sum = ctx->engine.decompose_total(d, m, shift, l, kind);
    } else {
      gwcell::PicClass t;
      if (twist_s == "even")
        t = l;
      else if (twist_s == "odd")
        t = l + gwcell::PicGenerator::delta(d);
      else
        t = gwcell::PicClass::parse(twist_s, d);
      sum = ctx->engine.decompose_grassmannian({d, m, shift, t, kind});
    }

    if (mode_s == "witt") sum = gwcell::witt_specialize(sum);
    if (mode_s == "eval") {
      if (!base_table_path || !*base_table_path) throw InvalidArgument("eval mode needs a base-theory table");
      const auto table = gwcell::load_base_table(base_table_path);
      const auto group = gwcell::evaluate(sum, table, degree);
      if (format == GWCELL_FORMAT_TEXT) {
        text = group.str() + "\n";
      } else {
        text = dump(
            {{"group", gwcell::to_json(group)}, {"degree", degree}, {"table", table.name}, {"sum", gwcell::to_json(sum)}});
      }
      return GWCELL_OK;
    }
    text = format == GWCELL_FORMAT_TEXT ? gwcell::to_text(sum) : dump(gwcell::to_json(sum));
    return GWCELL_OK;
  });
}

gwcell_status gwcell_projective_bundle(gwcell_context* ctx, int r, int twist_parity, int64_t shift, int split,
                                       gwcell_format format, char** out) {
  return guarded(ctx, out, [&](std::string& text) {
    check_format(format);
    const auto result = gwcell::decompose_projective_bundle({r, twist_parity, shift, split != 0});
    std::visit(
        [&](const auto& v) {
          text = format == GWCELL_FORMAT_TEXT ? gwcell::to_text(v) : dump(gwcell::to_json(v));
        },
        result);
    return GWCELL_OK;
  });
}

gwcell_status gwcell_young(gwcell_context* ctx, int d, int m, int even_only, const char* render, char** out) {
  return guarded(ctx, out, [&](std::string& text) {
    const std::string render_s = arg(render, "json");
    if (render_s != "json" && render_s != "ascii")
      throw InvalidArgument("render must be json or ascii, got '" + render_s + "'");
    const gwcell::Frame frame(d, m);
    if (gwcell::binomial(d + m, d) > gwcell::kEnumerationLimit)
      throw gwcell::DomainError("frame too large to enumerate");
    const auto diagrams = even_only ? gwcell::enumerate_even(frame) : gwcell::enumerate_diagrams(frame);
    if (render_s == "json") {
      text = dump(gwcell::young_listing_json(frame, diagrams, even_only != 0));
    } else {
      for (std::size_t i = 0; i < diagrams.size(); ++i) {
        if (i > 0) text += "\n";
        text += gwcell::to_string(diagrams[i]) + "  boxes=" + std::to_string(diagrams[i].boxes()) + "\n";
        text += gwcell::render_ascii(diagrams[i]);
      }
    }
    return GWCELL_OK;
  });
}

gwcell_status gwcell_les(gwcell_context* ctx, int r, int64_t shift, gwcell_format format, char** out) {
  return guarded(ctx, out, [&](std::string& text) {
    check_format(format);
    const auto les = gwcell::les_projective_odd(r, shift);
    text = format == GWCELL_FORMAT_TEXT ? gwcell::to_text(les) : dump(gwcell::to_json(les));
    return GWCELL_OK;
  });
}

gwcell_status gwcell_verify(gwcell_context* ctx, int d_max, int m_max, gwcell_format format, char** out) {
  return guarded(ctx, out, [&](std::string& text) {
    check_format(format);
    const auto report = gwcell::run_all(d_max, m_max);
    text = format == GWCELL_FORMAT_TEXT ? gwcell::to_text(report) : dump(gwcell::to_json(report));
    return report.ok() ? GWCELL_OK : GWCELL_ERR_VERIFICATION;
  });
}

}  // extern "C"
