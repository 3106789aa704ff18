#include "hw/parallel.hpp"

#include <atomic>

namespace hw {

namespace {
std::atomic<unsigned> g_width{1};
}

void set_parallel_width(unsigned width) { g_width.store(width == 0 ? 1 : width); }
unsigned parallel_width() { return g_width.load(); }

}  // namespace hw
