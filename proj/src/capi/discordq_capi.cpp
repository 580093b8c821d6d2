#include "discordq/discordq.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "discordq/cv_core.hpp"
#include "discordq/error.hpp"
#include "discordq/fock.hpp"
#include "discordq/json_io.hpp"
#include "discordq/q_marker.hpp"
#include "discordq/verify.hpp"
#include "discordq/wigner.hpp"

struct dq_state {
  discordq::wigner::WignerState w;
};

struct dq_fock_state {
  discordq::fock::FockState s;
};

namespace {

using namespace discordq;

thread_local std::string g_last_error;

void require(const void* p, const char* name) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(name) + " is null");
}

template <class F>
dq_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return DQ_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<dq_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DQ_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DQ_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return DQ_INTERNAL;
  }
}

cv::GaussianParams to_cpp(const dq_params& p) { return {p.a, p.b, p.c1, p.c2}; }

dq_params to_c(const cv::GaussianParams& p) { return {p.a, p.b, p.c1, p.c2}; }

cv::CovarianceMatrix to_cpp(const dq_covariance& v) {
  cv::CovarianceMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.v(i, j) = v.v[4 * i + j];
  return out;
}

dq_covariance to_c(const cv::CovarianceMatrix& v) {
  dq_covariance out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.v[4 * i + j] = v.v(i, j);
  return out;
}

dq_validation to_c(const cv::ValidationVerdict& v) {
  dq_validation out{};
  out.valid = v.valid() ? 1 : 0;
  for (const auto& item : v.violations) {
    if (out.count == DQ_MAX_VIOLATIONS) break;
    out.kinds[out.count] = static_cast<dq_violation>(item.kind);
    out.margins[out.count] = item.margin;
    ++out.count;
  }
  return out;
}

dq_report to_c(const QReport& r) {
  dq_report out{};
  out.q = r.q;
  out.term1 = r.term1;
  out.term2 = r.term2;
  out.method = static_cast<dq_method>(r.method);
  out.max_condition = r.meta.max_condition;
  out.tuple_count = r.meta.tuple_count;
  out.monomial_count = r.meta.monomial_count;
  out.imag_residue = r.meta.imag_residue;
  out.fock_dim_a = r.meta.fock_dim_a;
  out.fock_dim_b = r.meta.fock_dim_b;
  out.trace_deficit = r.meta.trace_deficit;
  return out;
}

marker::Grid to_cpp(const dq_grid& g) { return {g.start, g.stop, g.count}; }

fock::TruncationPolicy policy(double max_deficit) {
  if (!(max_deficit > 0.0)) throw Error(ErrorCode::InvalidArgument, "max_deficit must be positive");
  return {max_deficit};
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dq_status make_state(dq_state** out, const auto& build) {
  return guarded([&] {
    require(out, "out");
    *out = new dq_state{build()};
  });
}

dq_status make_fock(dq_fock_state** out, const auto& build) {
  return guarded([&] {
    require(out, "out");
    *out = new dq_fock_state{build()};
  });
}

}  // namespace

extern "C" {

const char* dq_status_string(dq_status status) {
  if (status == DQ_OK) return "OK";
  if (status == DQ_INTERNAL) return "Internal";
  if (status >= DQ_INVALID_ARGUMENT && status <= DQ_PARSE_ERROR) return to_string(static_cast<ErrorCode>(status));
  return "Unknown";
}

const char* dq_last_error(void) { return g_last_error.c_str(); }

const char* dq_version(void) { return "0.1.0"; }

const char* dq_violation_string(dq_violation v) { return cv::describe(static_cast<cv::Violation>(v)); }

dq_status dq_validate_covariance(const dq_covariance* v, dq_validation* out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    *out = to_c(cv::validate_covariance(to_cpp(*v)));
  });
}

dq_status dq_validate_params(const dq_params* p, dq_validation* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = to_c(cv::validate_params(to_cpp(*p)));
  });
}

dq_status dq_standard_form_reduce(const dq_covariance* v, dq_params* out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    *out = to_c(cv::standard_form_reduce(to_cpp(*v)));
  });
}

dq_status dq_params_covariance(const dq_params* p, dq_covariance* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = to_c(to_cpp(*p).covariance());
  });
}

dq_status dq_squeezed_thermal_params(double n, double r, dq_params* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_c(cv::squeezed_thermal_params(n, r));
  });
}

dq_status dq_covariance_from_json(const char* text, dq_covariance* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = to_c(io::covariance_from_json(text));
  });
}

const char* dq_method_string(dq_method m) { return to_string(static_cast<Method>(m)); }

dq_status dq_classify(double q, double threshold, int* nonzero) {
  return guarded([&] {
    require(nonzero, "nonzero");
    if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
    *nonzero = marker::classify(q, threshold).verdict == marker::Verdict::Nonzero ? 1 : 0;
  });
}

dq_status dq_q_gaussian_closed(const dq_params* p, dq_report* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = to_c(marker::q_gaussian_closed(to_cpp(*p)));
  });
}

dq_status dq_gaussian_zero_discord(const dq_params* p, double tol, int* zero, double* q) {
  return guarded([&] {
    require(p, "p");
    require(zero, "zero");
    const auto v = marker::gaussian_zero_discord(to_cpp(*p), tol);
    if (q) *q = v.q;
    *zero = v.verdict == marker::Verdict::Zero ? 1 : 0;
  });
}

dq_status dq_q_squeezed_thermal_closed(double n, double r, double* q) {
  return guarded([&] {
    require(q, "q");
    *q = marker::q_squeezed_thermal_closed(n, r);
  });
}

dq_status dq_q_photon_mixed_closed(double k, double* q) {
  return guarded([&] {
    require(q, "q");
    *q = marker::q_photon_mixed_closed(k);
  });
}

dq_status dq_q_mixture_closed(double k, const dq_params* p, double* q) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    *q = marker::q_mixture_closed(k, to_cpp(*p));
  });
}

dq_status dq_q_photon_added_n0(double r, double* q) {
  return guarded([&] {
    require(q, "q");
    *q = marker::q_photon_added_n0(r);
  });
}

dq_status dq_sign_analysis_f(const dq_params* p, double* f) {
  return guarded([&] {
    require(p, "p");
    require(f, "f");
    *f = marker::sign_analysis_f(to_cpp(*p));
  });
}

dq_status dq_state_gaussian(const dq_params* p, dq_state** out) {
  return make_state(out, [&] {
    require(p, "p");
    return wigner::wigner_of_gaussian(to_cpp(*p));
  });
}

dq_status dq_state_covariance(const dq_covariance* v, dq_state** out) {
  return make_state(out, [&] {
    require(v, "v");
    return wigner::wigner_of_covariance(to_cpp(*v));
  });
}

dq_status dq_state_squeezed_thermal(double n, double r, dq_state** out) {
  return make_state(out, [&] { return wigner::make_squeezed_thermal(n, r); });
}

dq_status dq_state_photon_mixed(double k, dq_state** out) {
  return make_state(out, [&] { return wigner::make_photon_number_mixed(k); });
}

dq_status dq_state_gaussian_vacuum_mix(double k, const dq_params* p, dq_state** out) {
  return make_state(out, [&] {
    require(p, "p");
    return wigner::make_gaussian_vacuum_mixture(k, to_cpp(*p));
  });
}

dq_status dq_state_photon_added(double n, double r, dq_state** out) {
  return make_state(out, [&] { return wigner::make_photon_added_squeezed_thermal(n, r); });
}

dq_status dq_state_from_json(const char* text, dq_state** out) {
  return make_state(out, [&] {
    require(text, "text");
    return io::wigner_from_json(text);
  });
}

dq_status dq_state_to_json(const dq_state* s, char** out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = copy_string(io::wigner_to_json(s->w));
  });
}

void dq_state_free(dq_state* s) { delete s; }

void dq_string_free(char* s) { delete[] s; }

dq_status dq_state_eval(const dq_state* s, const double point[4], double* out) {
  return guarded([&] {
    require(s, "s");
    require(point, "point");
    require(out, "out");
    *out = wigner::eval_wigner(s->w, wigner::Vec4(point[0], point[1], point[2], point[3]));
  });
}

dq_status dq_state_normalization(const dq_state* s, double* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = wigner::normalization(s->w);
  });
}

dq_status dq_state_purity(const dq_state* s, double* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = wigner::purity(s->w);
  });
}

dq_status dq_q_general(const dq_state* s, dq_report* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = to_c(marker::q_general(s->w));
  });
}

dq_status dq_fock_squeezed_thermal(double n, double r, int dim, double max_deficit, dq_fock_state** out) {
  return make_fock(out, [&] { return fock::fock_squeezed_thermal(n, r, dim, policy(max_deficit)); });
}

dq_status dq_fock_photon_mixed(double k, dq_fock_state** out) {
  return make_fock(out, [&] { return fock::fock_photon_number_mixed(k); });
}

dq_status dq_fock_photon_added(double n, double r, int dim, double max_deficit, dq_fock_state** out) {
  return make_fock(out, [&] { return fock::fock_photon_added_squeezed_thermal(n, r, dim, policy(max_deficit)); });
}

dq_status dq_fock_gaussian_vacuum_mix(double k, double n, double r, int dim, double max_deficit,
                                      dq_fock_state** out) {
  return make_fock(out, [&] { return fock::fock_gaussian_vacuum_mixture(k, n, r, dim, policy(max_deficit)); });
}

void dq_fock_free(dq_fock_state* s) { delete s; }

dq_status dq_fock_q(const dq_fock_state* s, dq_report* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = to_c(fock::fock_q(s->s));
  });
}

dq_status dq_fock_converge_squeezed_thermal(double n, double r, const int* dims, size_t ndims, double rel_tol,
                                            double max_deficit, double* q, double* history) {
  return guarded([&] {
    require(dims, "dims");
    require(q, "q");
    const auto pol = policy(max_deficit);
    auto builder = [&](int d) { return fock::fock_squeezed_thermal(n, r, d, pol); };
    auto fill = [&](const fock::History& h) {
      if (!history) return;
      for (std::size_t i = 0; i < h.size() && i < ndims; ++i) history[i] = h[i].second;
    };
    try {
      const auto c = fock::converge_q(builder, std::span<const int>(dims, ndims), rel_tol);
      fill(c.history);
      *q = c.q;
    } catch (const fock::NonConvergedError& e) {
      fill(e.history());
      throw;
    }
  });
}

dq_status dq_grid_parse(const char* text, dq_grid* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const auto g = marker::Grid::parse(text);
    *out = {g.start, g.stop, g.count};
  });
}

dq_status dq_scan_photon_added(const dq_grid* n_grid, const dq_grid* r_grid, unsigned threads, dq_scan_row* rows,
                               size_t capacity, size_t* count) {
  return guarded([&] {
    require(n_grid, "n_grid");
    require(r_grid, "r_grid");
    require(count, "count");
    const std::size_t needed = n_grid->count * r_grid->count;
    if (!rows || capacity < needed) {
      *count = needed;
      throw Error(ErrorCode::InvalidArgument, "row buffer holds " + std::to_string(capacity) + " rows, scan needs " +
                                                  std::to_string(needed));
    }
    const auto result = marker::scan_photon_added(to_cpp(*n_grid), to_cpp(*r_grid), threads);
    for (std::size_t i = 0; i < result.size(); ++i) {
      const auto& src = result[i];
      dq_scan_row& dst = rows[i];
      dst.n = src.n;
      dst.r = src.r;
      dst.q = src.q;
      dst.log10_q = src.log10_q;
      dst.ok = src.ok ? 1 : 0;
      dst.error = src.ok ? DQ_OK : static_cast<dq_status>(src.error);
      std::snprintf(dst.message, sizeof dst.message, "%s", src.message.c_str());
    }
    *count = result.size();
  });
}

void dq_verify_config_default(dq_verify_config* cfg) {
  if (!cfg) return;
  cfg->threshold = DQ_DEFAULT_THRESHOLD;
  cfg->fock_dim = DQ_DEFAULT_FOCK_DIM;
  cfg->threads = 0;
}

dq_status dq_verify(const dq_verify_config* cfg, dq_check_callback callback, void* user, int* all_passed) {
  return guarded([&] {
    require(cfg, "cfg");
    if (!(cfg->threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
    if (cfg->fock_dim < 4) throw Error(ErrorCode::InvalidArgument, "fock_dim must be at least 4");
    verify::Config c{cfg->threshold, cfg->fock_dim, cfg->threads};
    verify::Callback cb;
    if (callback) {
      cb = [&](const verify::CheckResult& r) {
        const dq_check_result out{r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), r.seconds};
        callback(&out, user);
      };
    }
    const auto results = verify::run_all(c, cb);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
