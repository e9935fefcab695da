#include "solab/parallel.h"

namespace solab {

namespace {
std::atomic<unsigned> workers_setting{0};
}

unsigned default_workers()
{
  unsigned w = workers_setting.load();
  if (w == 0)
    w = std::max(1u, std::thread::hardware_concurrency());
  return w;
}

void set_default_workers(unsigned workers)
{
  workers_setting.store(workers);
}

} // namespace solab
