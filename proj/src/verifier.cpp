#include "lrcolor/verifier.hpp"

#include <algorithm>  // for all_of, sort, min
#include <atomic>     // for atomic
#include <chrono>     // for steady_clock
#include <numeric>    // for accumulate
#include <stdexcept>  // for logic_error
#include <thread>     // for jthread, hardware_concurrency
#include <map>            // for map
#include <unordered_map>  // for unordered_map

#include "lrcolor/error.hpp"

namespace lrcolor {

  ////////////////////////////////////////////////////////////////////////
  // Factorization
  ////////////////////////////////////////////////////////////////////////

  bool Factorization::monotone() const noexcept {
    return std::is_sorted(parts.begin(), parts.end());
  }

  std::size_t Factorization::total() const noexcept {
    return std::accumulate(parts.begin(), parts.end(), std::size_t(0));
  }

  std::vector<std::size_t> Factorization::cuts() const {
    std::vector<std::size_t> out{start};
    for (auto p : parts) {
      out.push_back(out.back() + p);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // MonotoneCompositions
  ////////////////////////////////////////////////////////////////////////

  MonotoneCompositions::MonotoneCompositions(std::size_t total, std::size_t parts)
      : _total(total) {
    if (parts == 0 || total < parts) {
      _done = true;
      return;
    }
    _parts.assign(parts, 1);
    _parts.back() = total - parts + 1;
  }

  void MonotoneCompositions::advance() {
    skip_past(_parts.empty() ? 0 : _parts.size() - 1);
  }

  void MonotoneCompositions::skip_past(std::size_t i) {
    if (_done) {
      return;
    }
    std::size_t const h = _parts.size();
    if (h == 1) {
      _done = true;
      return;
    }
    i = std::min(i, h - 2);
    std::size_t before = 0;
    for (std::size_t j = 0; j < i; ++j) {
      before += _parts[j];
    }
    for (std::size_t j = i + 1; j-- > 0;) {
      std::size_t const v = _parts[j] + 1;
      // parts j..h-2 become v, the last part takes the rest and must be >= v
      if (_total - before >= (h - j) * v) {
        std::fill(_parts.begin() + j, _parts.end() - 1, v);
        _parts.back() = _total - before - (h - 1 - j) * v;
        return;
      }
      if (j > 0) {
        before -= _parts[j - 1];
      }
    }
    _done = true;
  }

  MonotoneCompositions enumerate_monotone(std::size_t total, std::size_t h) {
    return MonotoneCompositions(total, h);
  }

  ////////////////////////////////////////////////////////////////////////
  // Color tables
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using ColorId = std::uint32_t;

    class ColorInterner {
     public:
      ColorId intern(Color c) {
        auto [it, inserted] = _ids.try_emplace(std::move(c), static_cast<ColorId>(_ids.size()));
        return it->second;
      }
      [[nodiscard]] std::size_t size() const noexcept {
        return _ids.size();
      }

     private:
      std::unordered_map<Color, ColorId, ColorHash> _ids;
    };

    // Color id of buffer[start, start + len) for all start + len <= limit.
    class FactorColorTable {
     public:
      FactorColorTable(FactorColoring const& coloring, PrefixBuffer const& buffer, std::size_t limit)
          : _offset(limit + 1, 0) {
        for (std::size_t s = 0; s < limit; ++s) {
          _offset[s + 1] = _offset[s] + (limit - s);
        }
        _ids.resize(_offset[limit]);
        ColorInterner interner;
        for (std::size_t s = 0; s < limit; ++s) {
          for (std::size_t len = 1; s + len <= limit; ++len) {
            _ids[_offset[s] + len - 1] = interner.intern(coloring(buffer.view(s, len)));
          }
        }
        _distinct = interner.size();
      }

      [[nodiscard]] ColorId operator()(std::size_t start, std::size_t len) const noexcept {
        return _ids[_offset[start] + len - 1];
      }
      [[nodiscard]] std::size_t distinct() const noexcept {
        return _distinct;
      }

     private:
      std::vector<std::size_t> _offset;
      std::vector<ColorId>     _ids;
      std::size_t              _distinct = 0;
    };

    struct PrefixUnit {
      std::uint64_t                           enumerated = 0;
      std::optional<std::vector<std::size_t>> counterexample;
    };

    PrefixUnit check_prefix(FactorColorTable const& table, std::size_t total, std::size_t h) {
      PrefixUnit unit;
      for (auto comp = enumerate_monotone(total, h); !comp.done();) {
        ++unit.enumerated;
        auto const    parts    = comp.current();
        ColorId const first    = table(0, parts[0]);
        std::size_t   pos      = parts[0];
        std::size_t   mismatch = h;
        for (std::size_t i = 1; i < h; ++i) {
          if (table(pos, parts[i]) != first) {
            mismatch = i;
            break;
          }
          pos += parts[i];
        }
        if (mismatch == h) {
          unit.counterexample.emplace(parts.begin(), parts.end());
          return unit;
        }
        comp.skip_past(mismatch);
      }
      return unit;
    }

    // Scans prefix lengths [h, N] in increasing order, optionally on several
    // threads; results match the serial scan exactly.
    void scan_prefixes(FactorColorTable const& table,
                       std::size_t             N,
                       std::size_t             h,
                       bool                    parallel,
                       VerificationReport&     report) {
      if (N < h) {
        return;
      }
      std::vector<PrefixUnit> units(N - h + 1);
      std::atomic<std::size_t> next{h};
      std::atomic<std::size_t> best{N + 1};
      auto                     work = [&] {
        for (std::size_t len = next++; len <= N; len = next++) {
          if (len > best.load()) {
            break;
          }
          units[len - h] = check_prefix(table, len, h);
          if (units[len - h].counterexample) {
            for (auto b = best.load(); len < b && !best.compare_exchange_weak(b, len);) {
            }
          }
        }
      };
      std::size_t const threads
          = parallel ? std::max(2u, std::thread::hardware_concurrency()) : std::size_t(1);
      if (threads == 1) {
        work();
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
          pool.emplace_back(work);
        }
      }
      for (std::size_t len = h; len <= N; ++len) {
        auto& unit = units[len - h];
        ++report.prefixes_checked;
        report.factorizations_enumerated += unit.enumerated;
        if (unit.counterexample) {
          report.counterexample = Factorization{0, std::move(*unit.counterexample)};
          return;
        }
      }
    }

    Color recheck_counterexample(FactorColoring const& coloring,
                                 PrefixBuffer const&   buffer,
                                 Factorization const&  f,
                                 std::size_t           h,
                                 std::size_t           N) {
      if (f.start != 0 || f.parts.size() != h || !f.monotone() || f.total() > N
          || std::find(f.parts.begin(), f.parts.end(), 0) != f.parts.end()) {
        throw std::logic_error("counterexample is not a monotone prefix factorization");
      }
      auto  cuts  = f.cuts();
      Color first = coloring(buffer.view(0, f.parts[0]));
      for (std::size_t i = 1; i < h; ++i) {
        if (!(coloring(buffer.view(cuts[i], f.parts[i])) == first)) {
          throw std::logic_error("counterexample fails independent re-classification");
        }
      }
      return first;
    }

  }  // namespace

  VerificationReport check_theorem(FactorColoring const& coloring,
                                   PrefixBuffer const&   buffer,
                                   std::size_t           N,
                                   std::size_t           h,
                                   CheckOptions          options) {
    auto const started = std::chrono::steady_clock::now();
    if (N > buffer.size()) {
      throw Error(Errc::OutOfRange, "horizon " + std::to_string(N) + " exceeds buffer length "
                                        + std::to_string(buffer.size()));
    }
    if (h == 0) {
      throw Error(Errc::InvalidArgument, "factorization length must be positive");
    }
    VerificationReport report;
    report.N        = N;
    report.h        = h;
    report.coloring = coloring.name();

    FactorColorTable const table(coloring, buffer, N);
    report.colors_observed = table.distinct();
    report.degenerate      = h == 1 || table.distinct() <= 1;

    std::size_t const last_h = std::max(h, options.max_h);
    for (std::size_t len = h; len <= last_h && !report.counterexample; ++len) {
      scan_prefixes(table, N, len, options.parallel, report);
      if (report.counterexample) {
        report.counterexample_color
            = recheck_counterexample(coloring, buffer, *report.counterexample, len, N);
      }
    }
    report.elapsed_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
  }

  VerificationReport check_theorem(std::shared_ptr<ColoringContext const> ctx,
                                   std::size_t                            N,
                                   std::size_t                            h,
                                   CheckOptions                           options) {
    if (N > ctx->max_colorable_len()) {
      throw Error(Errc::OutOfRange, "horizon " + std::to_string(N)
                                        + " exceeds the colorable length "
                                        + std::to_string(ctx->max_colorable_len()));
    }
    std::size_t const K      = ctx->K();
    auto              report = check_theorem(theorem_coloring(ctx), ctx->buffer(), N, h, options);
    report.K                 = K;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Example constructions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    Word repeat_then_tail(WordView u, std::size_t copies, WordSource const& tail) {
      Word y;
      y.reserve(u.size() * (copies + 1));
      for (std::size_t i = 0; i < copies; ++i) {
        y.insert(y.end(), u.begin(), u.end());
      }
      std::size_t tail_len = u.size();
      if (auto limit = source_limit(tail)) {
        tail_len = std::min(tail_len, *limit);
      }
      auto const t = prefix(tail, tail_len);
      y.insert(y.end(), t.data().begin(), t.data().end());
      return y;
    }

  }  // namespace

  Factorization check_example_prepend(WordView              u,
                                      std::size_t           h,
                                      WordSource const&     tail,
                                      FactorColoring const& coloring) {
    if (u.empty()) {
      throw Error(Errc::EmptyPattern, "u must be nonempty");
    }
    if (h == 0) {
      throw Error(Errc::InvalidArgument, "h must be positive");
    }
    Word const    y = repeat_then_tail(u, h, tail);
    Factorization f{0, std::vector<std::size_t>(h, u.size())};
    WordView const yv(y);
    Color const    first = coloring(yv.first(u.size()));
    for (std::size_t i = 1; i < h; ++i) {
      if (!(coloring(yv.subspan(i * u.size(), u.size())) == first)) {
        throw std::logic_error("equal words received different colors");
      }
    }
    return f;
  }

  namespace {

    // Depth-first search for an increasing vertex list whose pairwise edge
    // colors all agree.
    bool extend_clique(std::vector<std::vector<ColorId>> const& edge,
                       std::vector<std::size_t>&                clique,
                       std::size_t                              target,
                       std::size_t                              next) {
      if (clique.size() == target) {
        return true;
      }
      std::size_t const n = edge.size();
      for (std::size_t v = next; v + (target - clique.size()) <= n; ++v) {
        if (clique.size() >= 2) {
          ColorId const c = edge[clique[0]][clique[1]];
          if (!std::all_of(clique.begin(), clique.end(), [&](auto w) { return edge[w][v] == c; })) {
            continue;
          }
        }
        clique.push_back(v);
        if (extend_clique(edge, clique, target, v + 1)) {
          return true;
        }
        clique.pop_back();
      }
      return false;
    }

  }  // namespace

  std::optional<Factorization> find_strongly_mono_prefix(WordView              u,
                                                         WordSource const&     tail,
                                                         std::size_t           h,
                                                         FactorColoring const& coloring,
                                                         std::size_t           H) {
    if (u.empty()) {
      throw Error(Errc::EmptyPattern, "u must be nonempty");
    }
    if (h == 0) {
      throw Error(Errc::InvalidArgument, "h must be positive");
    }
    if (H < h) {
      return std::nullopt;
    }
    Word const     y = repeat_then_tail(u, H, tail);
    WordView const yv(y);
    std::size_t const step = u.size();

    // vertex a stands for position a|u|
    ColorInterner                     interner;
    std::vector<std::vector<ColorId>> edge(H + 1, std::vector<ColorId>(H + 1, 0));
    for (std::size_t a = 0; a <= H; ++a) {
      for (std::size_t b = a + 1; b <= H; ++b) {
        edge[a][b] = edge[b][a] = interner.intern(coloring(yv.subspan(a * step, (b - a) * step)));
      }
    }

    std::vector<std::size_t> clique;
    if (!extend_clique(edge, clique, h + 1, 0)) {
      return std::nullopt;
    }
    // y[i, j) = y[i - |u|, j - |u|) inside u^H, so the clique can be shifted
    // to start at vertex 0
    Factorization f;
    for (std::size_t i = 0; i + 1 < clique.size(); ++i) {
      f.parts.push_back((clique[i + 1] - clique[i]) * step);
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ramsey tails
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class TailSearch {
     public:
      TailSearch(FactorColorTable const& table, std::size_t t) : _table(table), _target(t + 1) {}

      std::optional<std::vector<std::size_t>> run(std::vector<std::size_t> candidates) {
        _found.reset();
        _nodes = 0;
        dfs(candidates);
        return _found;
      }

     private:
      static constexpr std::size_t kNodeBudget = 1'000'000;

      [[nodiscard]] ColorId edge(std::size_t i, std::size_t j) const {
        return _table(i, j - i);
      }

      bool try_finish(std::vector<std::size_t> const& candidates) {
        for (auto const& [color, count] : _count) {
          std::size_t const extra = candidates.empty() ? 0 : 1;
          if (count + extra < _target) {
            continue;
          }
          std::vector<std::size_t> clique;
          for (auto const& [v, c] : _chain) {
            if (c == color && clique.size() < _target) {
              clique.push_back(v);
            }
          }
          if (clique.size() < _target) {
            clique.push_back(candidates.front());
          }
          _found = std::move(clique);
          return true;
        }
        return false;
      }

      bool dfs(std::vector<std::size_t> const& candidates) {
        if (++_nodes > kNodeBudget) {
          return false;
        }
        if (try_finish(candidates)) {
          return true;
        }
        std::size_t best = 0;
        for (auto const& [color, count] : _count) {
          best = std::max(best, count);
        }
        if (candidates.empty() || best + candidates.size() < _target) {
          return false;
        }
        std::size_t const pivot = candidates.front();
        std::unordered_map<ColorId, std::vector<std::size_t>> groups;
        std::vector<ColorId>                                  order;
        for (std::size_t k = 1; k < candidates.size(); ++k) {
          ColorId const c = edge(pivot, candidates[k]);
          auto [it, inserted] = groups.try_emplace(c);
          if (inserted) {
            order.push_back(c);
          }
          it->second.push_back(candidates[k]);
        }
        std::stable_sort(order.begin(), order.end(), [&](ColorId a, ColorId b) {
          return groups[a].size() > groups[b].size();
        });
        for (ColorId c : order) {
          _chain.emplace_back(pivot, c);
          ++_count[c];
          bool const ok = dfs(groups[c]);
          --_count[c];
          _chain.pop_back();
          if (ok) {
            return true;
          }
          if (_nodes > kNodeBudget) {
            return false;
          }
        }
        return false;
      }

      FactorColorTable const&                     _table;
      std::size_t                                 _target;
      std::size_t                                 _nodes = 0;
      std::vector<std::pair<std::size_t, ColorId>> _chain;
      std::map<ColorId, std::size_t>               _count;
      std::optional<std::vector<std::size_t>>      _found;
    };

  }  // namespace

  std::optional<Factorization> find_ramsey_tail(FactorColoring const& coloring,
                                                PrefixBuffer const&   buffer,
                                                std::size_t           N,
                                                std::size_t           t) {
    if (N > buffer.size()) {
      throw Error(Errc::OutOfRange, "horizon " + std::to_string(N) + " exceeds buffer length "
                                        + std::to_string(buffer.size()));
    }
    if (t < 1) {
      throw Error(Errc::InvalidArgument, "need at least one block");
    }
    if (t + 1 > N + 1) {
      return std::nullopt;
    }
    FactorColorTable const   table(coloring, buffer, N);
    std::vector<std::size_t> vertices(N + 1);
    std::iota(vertices.begin(), vertices.end(), std::size_t(0));
    auto clique = TailSearch(table, t).run(std::move(vertices));
    if (!clique) {
      return std::nullopt;
    }
    std::sort(clique->begin(), clique->end());
    Factorization f;
    f.start = clique->front();
    for (std::size_t i = 0; i + 1 < clique->size(); ++i) {
      f.parts.push_back((*clique)[i + 1] - (*clique)[i]);
    }
    return f;
  }

  bool verify_strongly_monochromatic(FactorColoring const&        coloring,
                                     PrefixBuffer const&          buffer,
                                     std::size_t                  start,
                                     std::span<std::size_t const> parts) {
    if (parts.empty() || std::find(parts.begin(), parts.end(), 0) != parts.end()) {
      throw Error(Errc::InvalidArgument, "parts must be nonempty and positive");
    }
    Factorization const f{start, std::vector<std::size_t>(parts.begin(), parts.end())};
    auto const          cuts = f.cuts();
    if (cuts.back() > buffer.size()) {
      throw Error(Errc::OutOfRange, "factorization runs past the buffer");
    }
    Color const color = coloring(buffer.view(cuts[0], parts[0]));
    for (std::size_t a = 0; a < cuts.size(); ++a) {
      for (std::size_t b = a + 1; b < cuts.size(); ++b) {
        if (!(coloring(buffer.view(cuts[a], cuts[b] - cuts[a])) == color)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Power, return-length and return-count audit
  ////////////////////////////////////////////////////////////////////////

  Lemma2Audit audit_lemma2(PrefixBuffer const& buffer, std::size_t K, std::size_t max_len) {
    if (K < 1) {
      throw Error(Errc::InvalidArgument, "K must be positive");
    }
    if (max_len == 0) {
      throw Error(Errc::InvalidArgument, "max_len must be positive");
    }
    if (buffer.size() / (K + 1) < max_len) {
      throw Error(Errc::BufferTooShort,
                  "power scan to root length " + std::to_string(max_len) + " needs "
                      + std::to_string((K + 1) * max_len) + " letters, have "
                      + std::to_string(buffer.size()));
    }
    Lemma2Audit audit;
    audit.K       = K;
    audit.max_len = max_len;

    // u^(K+1) with |u| = l at p iff x[q] == x[q + l] for all q in [p, p + Kl)
    std::size_t const n = buffer.size();
    for (std::size_t l = 1; l <= max_len; ++l) {
      std::size_t run = 0;
      for (std::size_t q = 0; q + l < n; ++q) {
        run = buffer[q] == buffer[q + l] ? run + 1 : 0;
        if (run >= K * l) {
          audit.power_violations.push_back({q + 1 - K * l, l});
        }
      }
    }

    std::size_t const max_count = K * (K + 1) * (K + 1);
    for (std::size_t len = 1; len <= max_len; ++len) {
      auto const occ = occurrences(buffer.view(), buffer.view(0, len));
      if (occ.size() < 2) {
        // no return at all inside the buffer; recorded with return length 0
        audit.band_violations.push_back({len, 0});
        continue;
      }
      auto const sys = return_system(buffer, len, n);
      for (auto const& w : sys.returns) {
        if (!(K * w.size() > len && w.size() <= K * len)) {
          audit.band_violations.push_back({len, w.size()});
        }
      }
      if (sys.returns.size() > max_count) {
        audit.count_violations.push_back({len, sys.returns.size()});
      }
    }
    return audit;
  }

}  // namespace lrcolor
