#include "wharf/core/kernels.hpp"

namespace wharf::kernels {

namespace {
struct Lane {
    const Ops* ops;
    const char* name;
};

Lane pick() {
    if (const Ops* a = avx2_ops_if_supported()) return {a, "avx2"};
    return {&scalar_ops(), "scalar"};
}

const Lane& lane() {
    static const Lane l = pick();
    return l;
}
}  // namespace

const Ops& ops() { return *lane().ops; }
const char* active_lane_name() { return lane().name; }

}  // namespace wharf::kernels
