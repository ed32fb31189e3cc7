// One PASS/FAIL line per headline criterion. Exit status is the number of
// failures. argv[1], when given, is the property-suite binary to run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>

#include "support/boards.hpp"
#include "twist/classifier.hpp"
#include "twist/oracle.hpp"

using namespace twist;
using namespace twist::testing;

namespace {

int failures = 0;

void report(const std::string &name, const std::function<bool(std::ostringstream &)> &check) {
  std::ostringstream detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = check(detail);
  } catch (const std::exception &e) {
    detail << "threw: " << e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  failures += !ok;
  std::printf("%s %s (%.1f ms) %s\n", ok ? "PASS" : "FAIL", name.c_str(), ms,
              detail.str().c_str());
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool oracle_count(std::ostringstream &out, const TwistGraph &g, GroupCase kind, int want,
                  double budget_ms) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r = verify_classifier(g, g.home());
  const double ms = elapsed_ms(t0);
  out << "case=" << (r.kind ? std::string(to_string(*r.kind)) : "?") << " by_home=" << r.by_home
      << " states=" << r.states << " agree=" << r.agree;
  if (!r.reason.empty())
    out << " reason=" << r.reason;
  return !r.undecided && r.agree && r.kind == kind && r.by_home == static_cast<std::size_t>(want) &&
         ms < budget_ms;
}

} // namespace

int main(int argc, char **argv) {
  report("theta5 m=3 mod-3 oracle", [](std::ostringstream &out) {
    TwistGraph g = board("theta5", 3, {{"e1", 1}, {"e2", 1}, {"e4", 1}});
    out << "full_space=" << full_space_size(g) << " ";
    return full_space_size(g) == 9720 && oracle_count(out, g, GroupCase::Theta5Mod3, 324, 5000);
  });
  report("theta5 m=3 plain oracle", [](std::ostringstream &out) {
    return oracle_count(out, board("theta5", 3, {{"e1", 1}}), GroupCase::Theta5Plain, 972, 5000);
  });
  report("theta7 m=2 parity oracle", [](std::ostringstream &out) {
    TwistGraph g = board("theta7", 2, {{"inf-center", 1}});
    out << "full_space=" << full_space_size(g) << " ";
    return full_space_size(g) == 322560 &&
           oracle_count(out, g, GroupCase::Theta7Parity, 3840, 60000);
  });
  report("k4 m=2 oracle", [](std::ostringstream &out) {
    return oracle_count(out, board("k4", 2, {{"v0v1", 1}}), GroupCase::FullGenSym, 48, 60000);
  });
  report("k33 m=3 oracle", [](std::ostringstream &out) {
    return oracle_count(out, board("k33", 3, {{"a0b0", 1}}), GroupCase::EvenPermFullRot, 14580,
                        60000);
  });
  report("c4 m=3 oracle", [](std::ostringstream &out) {
    return oracle_count(out, board("cycle:4", 3, {{"e0", 1}}), GroupCase::Cyclic, 9, 60000);
  });

  report("fifteen_plus_four claims", [](std::ostringstream &out) {
    const auto t0 = std::chrono::steady_clock::now();
    TwistGraph g = preset("fifteen_plus_four");
    GroupDescriptor d = classify(g, g.home());
    PuzzleState s = solved_state(g, g.home());
    const bool rotated = is_solvable(d, g, rotate_tile(g, s, 7, 1));
    const bool swapped = is_solvable(d, g, swap_tiles(s, 7, 8));
    const bool both = is_solvable(d, g, rotate_tile(g, swap_tiles(s, 7, 8), 7, 1));
    const double ms = elapsed_ms(t0);
    out << "rotated=" << rotated << " swapped=" << swapped << " swapped+rotated=" << both
        << " case=" << to_string(d.kind);
    return !rotated && !swapped && both && ms < 100;
  });

  report("wilson 4x4 m=1", [](std::ostringstream &out) {
    TwistGraph g = board("grid:4x4", 1);
    PuzzleState s = solved_state(g, g.home());
    const bool odd = is_solvable(g, g.home(), swap_tiles(s, 1, 2));
    const bool even = is_solvable(g, g.home(), swap_tiles(swap_tiles(s, 1, 2), 3, 4));
    out << "odd=" << odd << " even=" << even;
    return !odd && even;
  });
  report("wilson 2x3 oracle", [](std::ostringstream &out) {
    TwistGraph g = board("grid:2x3", 1);
    auto r = enumerate_reachable(g, solved_state(g, g.home()), kDefaultCap, g.home());
    GroupDescriptor d = classify(g, g.home());
    out << "full_space=" << full_space_size(g) << " reachable=" << r.states.size()
        << " blank_at_home=" << r.by_home.size() << " classifier_order=" << d.order;
    std::size_t rejected = 0;
    for (const auto &e : r.by_home)
      rejected += !accepts(d, e);
    return r.exhausted && full_space_size(g) == 720 && r.states.size() == 360 &&
           d.order == r.by_home.size() && rejected == 0;
  });

  report("figure8 non-commutativity", [](std::ostringstream &out) {
    TwistGraph g = preset("figure8");
    const std::size_t u = g.vertex_index("u");
    ClosedPath p(g, u, mvs(g, {"ur+", "ur_dashed-"}));
    ClosedPath q(g, u, mvs(g, {"ur+", "rb+", "bu+"}));
    auto sites = home_sites(g, u);
    GroupElement want_pq =
        GroupElement::from_labels(2, sites, {{"r", "b"}, {"b", "r"}}, {{"b", 1}});
    GroupElement want_qp =
        GroupElement::from_labels(2, sites, {{"r", "b"}, {"b", "r"}}, {{"r", 1}});
    GroupElement pq = element_of_path(g, p.concat(g, q));
    GroupElement qp = element_of_path(g, q.concat(g, p));
    PuzzleState start = solved_state(g, u);
    GroupElement replay_pq = state_to_element(g, apply_moves(g, start, p.concat(g, q).steps()), u);
    GroupElement replay_qp = state_to_element(g, apply_moves(g, start, q.concat(g, p).steps()), u);
    out << "pq=" << pq.to_string() << " qp=" << qp.to_string();
    return pq == want_pq && qp == want_qp && pq != qp && replay_pq == pq && replay_qp == qp;
  });

  report("pgl(2,5) table", [](std::ostringstream &out) {
    auto table = pgl25_table();
    const bool odd = std::any_of(table.begin(), table.end(),
                                 [](const auto &p) { return permutation_sign(p) == -1; });
    TwistGraph g = preset("theta7");
    GroupDescriptor d = classify(g, g.vertex_index("center"));
    std::vector<std::uint32_t> label(g.vertex_count());
    const char *ids[] = {"0", "1", "2", "3", "4"};
    auto sites = home_sites(g, g.vertex_index("center"));
    GroupElement probe = GroupElement::identity(1, sites);
    for (std::uint32_t i = 0; i < 5; ++i)
      label[probe.index_of(ids[i])] = i;
    label[probe.index_of("inf")] = 5;
    std::vector<std::vector<std::uint32_t>> relabelled;
    for (const auto &[rank, q] : d.exceptional->permutations) {
      auto s = permutation_unrank(rank, 6);
      std::vector<std::uint32_t> p(6);
      for (std::size_t i = 0; i < 6; ++i)
        p[label[i]] = label[s[i]];
      relabelled.push_back(p);
    }
    std::sort(relabelled.begin(), relabelled.end());
    out << "size=" << table.size() << " closure=" << relabelled.size() << " has_odd=" << odd;
    return table.size() == 120 && odd && relabelled == table;
  });

  if (argc > 1) {
    report("property suites", [&](std::ostringstream &out) {
      std::string cmd = std::string(argv[1]) + " --gtest_brief=1 > /dev/null 2>&1";
      int rc = std::system(cmd.c_str());
      out << "exit=" << rc;
      return rc == 0;
    });
  } else {
    std::printf("FAIL property suites (binary path not given)\n");
    ++failures;
  }

  std::printf("%d failure(s)\n", failures);
  return failures;
}
