#include "lrcolor/returns.hpp"

#include <algorithm>  // for equal, lower_bound, max, reverse
#include <map>        // for map
#include <string>     // for to_string

#include "lrcolor/error.hpp"

namespace lrcolor {

  std::vector<std::size_t> occurrences(WordView w, WordView u) {
    if (u.empty()) {
      throw Error(Errc::EmptyPattern, "cannot search for the empty word");
    }
    std::vector<std::size_t> out;
    if (u.size() > w.size()) {
      return out;
    }
    for (std::size_t p = 0; p + u.size() <= w.size(); ++p) {
      if (w[p] == u[0] && std::equal(u.begin() + 1, u.end(), w.begin() + p + 1)) {
        out.push_back(p);
      }
    }
    return out;
  }

  namespace {

    // Distinct gap words between consecutive positions, in order of first
    // appearance; derived receives the index of every gap.
    std::vector<Word> collect_gaps(WordView                        w,
                                   std::vector<std::size_t> const& pos,
                                   IndexWord*                      derived) {
      std::vector<Word> distinct;
      for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
        auto gap = w.subspan(pos[j], pos[j + 1] - pos[j]);
        auto it  = std::find_if(distinct.begin(), distinct.end(), [&](Word const& r) {
          return std::equal(r.begin(), r.end(), gap.begin(), gap.end());
        });
        if (it == distinct.end()) {
          distinct.emplace_back(gap.begin(), gap.end());
          it = distinct.end() - 1;
        }
        if (derived != nullptr) {
          derived->push_back(static_cast<ReturnIndex>(it - distinct.begin()));
        }
      }
      return distinct;
    }

    std::size_t count_within(std::vector<std::size_t> const& pos,
                             std::size_t                     len,
                             std::size_t                     window) {
      return static_cast<std::size_t>(
          std::find_if(pos.begin(), pos.end(), [&](auto p) { return p + len > window; })
          - pos.begin());
    }

  }  // namespace

  std::vector<Word> gap_returns(WordView w, WordView u) {
    return collect_gaps(w, occurrences(w, u), nullptr);
  }

  std::optional<std::size_t> ReturnSystem::boundary_index(std::size_t pos) const {
    auto it = std::lower_bound(boundaries.begin(), boundaries.end(), pos);
    if (it == boundaries.end() || *it != pos) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - boundaries.begin());
  }

  ReturnSystem return_system(PrefixBuffer const& buffer, WordView base, std::size_t window) {
    if (base.empty()) {
      throw Error(Errc::EmptyPattern, "return system of the empty word");
    }
    if (!buffer.has_prefix(base)) {
      throw Error(Errc::NotAPrefix, "base \"" + buffer.alphabet().decode(base)
                                        + "\" is not a prefix of the buffer");
    }
    if (window > buffer.size()) {
      throw Error(Errc::OutOfRange,
                  "window " + std::to_string(window) + " exceeds buffer length "
                      + std::to_string(buffer.size()));
    }
    auto const   w = buffer.view(0, window);
    ReturnSystem sys;
    sys.base       = Word(base.begin(), base.end());
    sys.window     = window;
    sys.boundaries = occurrences(w, base);
    if (sys.boundaries.size() < 2) {
      throw Error(Errc::WindowTooSmall,
                  "prefix of length " + std::to_string(base.size())
                      + " occurs fewer than twice in a window of " + std::to_string(window));
    }
    sys.returns = collect_gaps(w, sys.boundaries, &sys.derived);

    // Positions are increasing, so the half-window returns are a leading
    // segment of the full list; equal sets means equal counts.
    std::size_t const half = count_within(sys.boundaries, base.size(), window / 2);
    if (half >= 2) {
      std::vector<std::size_t> head(sys.boundaries.begin(), sys.boundaries.begin() + half);
      sys.stable = collect_gaps(w, head, nullptr).size() == sys.returns.size();
    }
    return sys;
  }

  ReturnSystem return_system(PrefixBuffer const& buffer,
                             std::size_t         base_len,
                             std::size_t         window) {
    if (base_len > buffer.size()) {
      throw Error(Errc::OutOfRange, "base longer than the buffer");
    }
    return return_system(buffer, buffer.view(0, base_len), window);
  }

  Word theta(ReturnSystem const& system, std::span<ReturnIndex const> r) {
    Word out;
    for (ReturnIndex i : r) {
      if (i >= system.returns.size()) {
        throw Error(Errc::IndexOutOfRange,
                    "return index " + std::to_string(i) + " >= "
                        + std::to_string(system.returns.size()));
      }
      auto const& w = system.returns[i];
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  namespace {

    // Left-to-right parse of v over the return set. Theta is injective, so
    // at most one complete parse exists; dead ends are simply abandoned.
    std::optional<IndexWord> parse_any(ReturnSystem const& system, WordView v) {
      constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
      std::vector<std::size_t> from(v.size() + 1, kUnreached);
      std::vector<ReturnIndex> via(v.size() + 1, 0);
      from[0] = 0;
      for (std::size_t pos = 0; pos < v.size(); ++pos) {
        if (from[pos] == kUnreached) {
          continue;
        }
        for (std::size_t i = 0; i < system.returns.size(); ++i) {
          auto const& w = system.returns[i];
          if (w.size() <= v.size() - pos && from[pos + w.size()] == kUnreached
              && std::equal(w.begin(), w.end(), v.begin() + pos)) {
            from[pos + w.size()] = pos;
            via[pos + w.size()]  = static_cast<ReturnIndex>(i);
          }
        }
      }
      if (from[v.size()] == kUnreached) {
        return std::nullopt;
      }
      IndexWord r;
      for (std::size_t pos = v.size(); pos > 0; pos = from[pos]) {
        r.push_back(via[pos]);
      }
      std::reverse(r.begin(), r.end());
      return r;
    }

  }  // namespace

  std::optional<IndexWord> parse_by_returns(ReturnSystem const& system, WordView v) {
    if (v.empty()) {
      return std::nullopt;
    }
    // a prefix of the analysed word is read off the boundaries directly
    if (auto j = system.boundary_index(v.size())) {
      IndexWord r(system.derived.begin(), system.derived.begin() + *j);
      Word      spelled = theta(system, r);
      if (std::equal(spelled.begin(), spelled.end(), v.begin(), v.end())) {
        return r;
      }
    }
    return parse_any(system, v);
  }

  std::vector<IndexWord> lambda_morphism(ReturnSystem const& sys_u, ReturnSystem const& sys_v) {
    if (sys_v.base.size() > sys_u.base.size()
        || !std::equal(sys_v.base.begin(), sys_v.base.end(), sys_u.base.begin())) {
      throw Error(Errc::NotAPrefix, "the shorter base must be a prefix of the longer one");
    }
    if (!sys_u.stable || !sys_v.stable) {
      throw Error(Errc::Unstable, "lambda needs two stable return systems");
    }
    std::vector<IndexWord> m(sys_u.returns.size());
    std::vector<bool>      seen(sys_u.returns.size(), false);
    for (std::size_t j = 0; j < sys_u.derived.size(); ++j) {
      auto const i = sys_u.derived[j];
      if (seen[i]) {
        continue;
      }
      seen[i]    = true;
      auto first = sys_v.boundary_index(sys_u.boundaries[j]);
      auto last  = sys_v.boundary_index(sys_u.boundaries[j + 1]);
      if (!first || !last) {
        throw Error(Errc::AlignmentFailure,
                    "boundary " + std::to_string(first ? sys_u.boundaries[j + 1]
                                                       : sys_u.boundaries[j])
                        + " of the longer base is not a boundary of the shorter one");
      }
      m[i].assign(sys_v.derived.begin() + *first, sys_v.derived.begin() + *last);
      if (theta(sys_v, m[i]) != sys_u.returns[i]) {
        throw Error(Errc::AlignmentFailure,
                    "theta(lambda(" + std::to_string(i) + ")) differs from the return");
      }
    }
    return m;
  }

  namespace {

    struct WindowScan {
      std::vector<KSample> samples;
      bool                 stable = true;
    };

    WindowScan scan_factors(WordView x, std::size_t max_len, std::size_t window) {
      WindowScan  scan;
      auto const  w    = x.first(window);
      std::size_t half = window / 2;
      for (std::size_t len = 1; len <= max_len && len <= window; ++len) {
        std::map<Word, std::vector<std::size_t>> positions;
        for (std::size_t p = 0; p + len <= window; ++p) {
          auto f = w.subspan(p, len);
          positions[Word(f.begin(), f.end())].push_back(p);
        }
        for (auto& [factor, pos] : positions) {
          std::size_t const in_half = count_within(pos, len, half);
          if (in_half < 2) {
            // a factor first seen late, or seen once, means the window has
            // not yet converged
            scan.stable = false;
            if (pos.size() < 2) {
              continue;
            }
          }
          auto all = collect_gaps(w, pos, nullptr);
          if (in_half >= 2) {
            std::vector<std::size_t> head(pos.begin(), pos.begin() + in_half);
            if (collect_gaps(w, head, nullptr).size() != all.size()) {
              scan.stable = false;
            }
          }
          KSample s;
          s.factor       = factor;
          s.length       = len;
          s.return_count = all.size();
          s.max_return   = 0;
          s.min_return   = window;
          for (auto const& r : all) {
            s.max_return = std::max(s.max_return, r.size());
            s.min_return = std::min(s.min_return, r.size());
          }
          scan.samples.push_back(std::move(s));
        }
      }
      return scan;
    }

    std::size_t k_from(std::vector<KSample> const& samples) {
      std::size_t k = 2;
      for (auto const& s : samples) {
        k = std::max(k, (s.max_return + s.length - 1) / s.length);
      }
      return k;
    }

  }  // namespace

  KEstimate estimate_K(PrefixBuffer const& buffer, std::size_t max_base_len) {
    if (max_base_len == 0) {
      throw Error(Errc::InvalidArgument, "max_base_len must be positive");
    }
    std::size_t const n      = buffer.size();
    std::size_t       window = std::min(n, 4 * max_base_len);
    while (true) {
      auto              scan = scan_factors(buffer.view(), max_base_len, window);
      std::size_t const k    = k_from(scan.samples);
      std::size_t const need = (k + 2) * max_base_len;
      if (scan.stable && window >= std::min(need, n)) {
        KEstimate est;
        est.k_hat     = k;
        est.window    = window;
        est.margin_ok = std::all_of(scan.samples.begin(), scan.samples.end(), [&](auto const& s) {
          return s.max_return <= k * s.length && k * s.min_return > s.length
                 && s.return_count <= k * (k + 1) * (k + 1);
        });
        est.samples = std::move(scan.samples);
        return est;
      }
      if (window == n) {
        throw Error(Errc::Unstable, "return sets of factors up to length "
                                        + std::to_string(max_base_len)
                                        + " did not converge within a buffer of "
                                        + std::to_string(n));
      }
      window = std::min(n, std::max(2 * window, need));
    }
  }

}  // namespace lrcolor
