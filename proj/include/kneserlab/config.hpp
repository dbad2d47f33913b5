#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace kneserlab {

constexpr std::uint64_t kDefaultMaxVertices = 200000;

inline std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s) return fallback;
    return static_cast<std::uint64_t>(v);
}

/// Hard guard on constructed vertex counts (KNESERLAB_MAX_VERTICES).
/// A process-wide override takes precedence over the environment; the
/// CLI sets it from --max-vertices.
class VertexGuard {
public:
    static std::uint64_t limit() {
        if (override_ != 0) return override_;
        return env_u64("KNESERLAB_MAX_VERTICES", kDefaultMaxVertices);
    }
    static void set_override(std::uint64_t v) { override_ = v; }
    static void clear_override() { override_ = 0; }

private:
    static inline std::uint64_t override_ = 0;
};

} // namespace kneserlab
