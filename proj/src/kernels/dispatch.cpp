#include <atomic>
#include <cstdlib>
#include <string_view>

#include "bst/error.hpp"
#include "bst/kernels.hpp"

namespace bst::kernels {

#if defined(BST_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

const KernelTable* avx2_table() noexcept {
#if defined(BST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* automatic() noexcept {
  const char* env = std::getenv("BST_KERNELS");
  if (env && std::string_view(env) == "scalar") return &scalar_table();
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& selected() {
  static std::atomic<const KernelTable*> table{automatic()};
  return table;
}

}  // namespace

const KernelTable& active() noexcept { return *selected().load(std::memory_order_relaxed); }

void force_isa(std::optional<Isa> isa) {
  if (!isa) {
    selected().store(automatic());
    return;
  }
  if (*isa == Isa::kScalar) {
    selected().store(&scalar_table());
    return;
  }
  const KernelTable* t = avx2_table();
  if (!t) throw DomainError("AVX2 kernels are not available on this build or CPU");
  selected().store(t);
}

}  // namespace bst::kernels
