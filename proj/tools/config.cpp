#include "config.hpp"

#include "pcx/error.hpp"

namespace pcxcli {

using pcx::Error;
using pcx::ErrorKind;

void validate(const RunConfig& c) {
  auto at_least = [](const char* name, long long v, long long lo) {
    if (v < lo) throw Error(ErrorKind::Config, std::string(name) + " must be >= " + std::to_string(lo));
  };
  at_least("k", c.k, 1);
  at_least("p", c.p, 1);
  at_least("K", c.K, 0);
  at_least("radius", c.radius, 0);
  at_least("tree-radius", c.tree_radius, 0);
  at_least("inner", c.inner, 0);
  at_least("exponent-cap", c.exponent_cap, 1);
  at_least("bfs-cap", c.bfs_cap, 1);
  at_least("bfs-depth", c.bfs_depth, 0);
  at_least("move-depth", c.move_depth, -1);
  at_least("ball-radius", c.ball_radius, 1);
  at_least("stages", c.stages, 1);
  at_least("samples", c.samples, 1);
  at_least("D", c.D, 0);
  at_least("M", c.M, 1);
  at_least("series", c.series, 1);
  at_least("range", c.range, 1);
  for (const auto* s : {&c.theta, &c.ce, &c.cg, &c.cp, &c.B, &c.c_wpd}) {
    try {
      pcx::Rational::parse(*s);
    } catch (const Error& e) {
      throw Error(ErrorKind::Config, "bad number '" + *s + "'");
    }
  }
}

pcx::Json to_json(const RunConfig& c) {
  return pcx::Json{{"table", c.table},
                   {"theta", c.theta},
                   {"k", c.k},
                   {"f", c.f},
                   {"p", c.p},
                   {"K", c.K},
                   {"radius", c.radius},
                   {"tree_radius", c.tree_radius},
                   {"inner", c.inner},
                   {"exponent_cap", c.exponent_cap},
                   {"bfs_cap", c.bfs_cap},
                   {"bfs_depth", c.bfs_depth},
                   {"move_depth", c.move_depth},
                   {"ball_radius", c.ball_radius},
                   {"stages", c.stages},
                   {"seed", c.seed},
                   {"samples", c.samples},
                   {"out", c.out},
                   {"dot", c.dot},
                   {"ce", c.ce},
                   {"cg", c.cg},
                   {"cp", c.cp},
                   {"B", c.B},
                   {"h", c.h},
                   {"x", c.x},
                   {"element", c.element},
                   {"D", c.D},
                   {"M", c.M},
                   {"c_wpd", c.c_wpd},
                   {"conjugator", c.conjugator},
                   {"series", c.series},
                   {"f1", c.f1},
                   {"f2", c.f2},
                   {"range", c.range}};
}

}  // namespace pcxcli
