#include "opcheck/kernels.hpp"

#include <cstdlib>

#include "opcheck/errors.hpp"

namespace opcheck::kernels {
namespace {

const detail::Dispatch* g_active = nullptr;

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::Dispatch* resolve(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_table;
    case Backend::avx2:
      if (!cpu_has_avx2()) throw ConfigError("kernel backend 'avx2' not supported by this CPU");
      return &detail::avx2_table;
    case Backend::automatic:
      return cpu_has_avx2() ? &detail::avx2_table : &detail::scalar_table;
  }
  throw ConfigError("invalid kernel backend");
}

Backend parse_backend(const std::string& name) {
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  if (name == "auto") return Backend::automatic;
  throw ConfigError("unknown kernel backend '" + name + "' (expected scalar|avx2|auto)");
}

const detail::Dispatch* active() {
  if (!g_active) {
    Backend b = Backend::automatic;
    if (const char* env = std::getenv("OPCHECK_KERNELS")) b = parse_backend(env);
    g_active = resolve(b);
  }
  return g_active;
}

}  // namespace

void set_backend(Backend b) { g_active = resolve(b); }

void set_backend(const std::string& name) { set_backend(parse_backend(name)); }

std::string active_backend() {
  return active() == &detail::avx2_table ? "avx2" : "scalar";
}

bool avx2_available() { return cpu_has_avx2(); }

void matmul_nn(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n) {
  active()->nn(A, B, C, m, k, n);
}

void matmul_cn(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n) {
  active()->cn(A, B, C, m, k, n);
}

void matmul_nc(const cd* A, const cd* B, cd* C, std::size_t m, std::size_t k, std::size_t n) {
  active()->nc(A, B, C, m, k, n);
}

cd dotc(const cd* x, const cd* y, std::size_t n) { return active()->dotc(x, y, n); }

}  // namespace opcheck::kernels
