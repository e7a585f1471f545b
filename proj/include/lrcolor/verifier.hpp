#ifndef LRCOLOR_VERIFIER_HPP_
#define LRCOLOR_VERIFIER_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "lrcolor/coloring.hpp"
#include "lrcolor/word.hpp"

namespace lrcolor {

  //! Consecutive blocks of the given lengths starting at `start`.
  struct Factorization {
    std::size_t              start = 0;
    std::vector<std::size_t> parts;

    [[nodiscard]] bool        monotone() const noexcept;
    [[nodiscard]] std::size_t total() const noexcept;
    //! start, start + parts[0], ..., start + total()
    [[nodiscard]] std::vector<std::size_t> cuts() const;

    bool operator==(Factorization const&) const = default;
  };

  //! Streams the partitions of `total` into exactly `parts` positive parts,
  //! each written as a nondecreasing sequence, in lexicographic order.
  //!
  //! skip_past(i) jumps to the next sequence whose first i + 1 entries differ
  //! from the current one. advance() is skip_past(parts - 2), since the last
  //! entry is determined by the others.
  class MonotoneCompositions {
   public:
    MonotoneCompositions(std::size_t total, std::size_t parts);

    [[nodiscard]] bool done() const noexcept {
      return _done;
    }
    [[nodiscard]] std::span<std::size_t const> current() const noexcept {
      return _parts;
    }
    void advance();
    void skip_past(std::size_t i);

   private:
    std::size_t              _total;
    std::vector<std::size_t> _parts;
    bool                     _done = false;
  };

  [[nodiscard]] MonotoneCompositions enumerate_monotone(std::size_t total, std::size_t h);

  struct PowerWitness {
    std::size_t position = 0;
    std::size_t root_len = 0;
    bool        operator==(PowerWitness const&) const = default;
  };

  struct BandWitness {
    std::size_t base_len   = 0;
    std::size_t return_len = 0;  // 0: the base does not recur inside the buffer
  };

  struct CountWitness {
    std::size_t base_len = 0;
    std::size_t count    = 0;
  };

  struct Lemma2Audit {
    std::size_t               K       = 0;
    std::size_t               max_len = 0;
    std::vector<PowerWitness> power_violations;
    std::vector<BandWitness>  band_violations;
    std::vector<CountWitness> count_violations;

    [[nodiscard]] bool power_free() const noexcept {
      return power_violations.empty();
    }
    [[nodiscard]] bool length_band() const noexcept {
      return band_violations.empty();
    }
    [[nodiscard]] bool count_bound() const noexcept {
      return count_violations.empty();
    }
    [[nodiscard]] bool clean() const noexcept {
      return power_free() && length_band() && count_bound();
    }
  };

  struct VerificationReport {
    std::string                  word_id;
    std::size_t                  K = 0;
    std::size_t                  N = 0;
    std::size_t                  h = 0;
    std::string                  coloring;
    std::optional<Factorization> counterexample;
    std::optional<Color>         counterexample_color;
    std::size_t                  prefixes_checked         = 0;
    std::uint64_t                factorizations_enumerated = 0;
    std::size_t                  colors_observed          = 0;
    bool                         degenerate               = false;
    std::optional<Lemma2Audit>   lemma_audit;
    double                       elapsed_seconds = 0;
  };

  struct CheckOptions {
    //! fan out over prefix lengths on all hardware threads
    bool        parallel = false;
    //! when > h, also check every factorization length in (h, max_h]
    std::size_t max_h = 0;
  };

  //! Searches every prefix length N' in [h, N] for a monotone factorization
  //! of length h whose parts all have one color. Stops at the first one.
  //! Throws OutOfRange when N exceeds the buffer.
  [[nodiscard]] VerificationReport check_theorem(FactorColoring const& coloring,
                                                 PrefixBuffer const&   buffer,
                                                 std::size_t           N,
                                                 std::size_t           h,
                                                 CheckOptions          options = {});

  //! Same, with the theorem coloring of ctx; N must not exceed
  //! ctx.max_colorable_len().
  [[nodiscard]] VerificationReport check_theorem(std::shared_ptr<ColoringContext const> ctx,
                                                 std::size_t                            N,
                                                 std::size_t                            h,
                                                 CheckOptions options = {});

  //! The h-fold factorization (u, ..., u) of u^h tail, checked to be monotone
  //! and monochromatic under `coloring`.
  [[nodiscard]] Factorization check_example_prepend(WordView              u,
                                                    std::size_t           h,
                                                    WordSource const&     tail,
                                                    FactorColoring const& coloring);

  //! Looks for a monochromatic (h + 1)-clique among {0, |u|, ..., H|u|} in the
  //! edge coloring {i, j} -> coloring(y[i, j)) of y = u^H tail, shifted so that
  //! it starts at 0. nullopt when H is too small.
  [[nodiscard]] std::optional<Factorization> find_strongly_mono_prefix(
      WordView              u,
      WordSource const&     tail,
      std::size_t           h,
      FactorColoring const& coloring,
      std::size_t           H);

  //! Finds i_0 < ... < i_t <= N with every merged block buffer[i_a, i_b)
  //! of one color, by pivot-and-filter with backtracking over the pivot's
  //! color. nullopt means the horizon was insufficient, not that no tail
  //! exists.
  [[nodiscard]] std::optional<Factorization> find_ramsey_tail(FactorColoring const& coloring,
                                                              PrefixBuffer const&   buffer,
                                                              std::size_t           N,
                                                              std::size_t           t);

  //! True iff every run of consecutive parts has the color of the first part.
  [[nodiscard]] bool verify_strongly_monochromatic(FactorColoring const&        coloring,
                                                   PrefixBuffer const&          buffer,
                                                   std::size_t                  start,
                                                   std::span<std::size_t const> parts);

  //! No u^(K+1) with |u| <= max_len anywhere in the buffer; for every prefix
  //! u with |u| <= max_len and every return w: |u| < K|w|, |w| <= K|u| and
  //! at most K(K+1)^2 returns. Throws BufferTooShort below (K+1) max_len.
  [[nodiscard]] Lemma2Audit audit_lemma2(PrefixBuffer const& buffer,
                                         std::size_t         K,
                                         std::size_t         max_len);

}  // namespace lrcolor

#endif  // LRCOLOR_VERIFIER_HPP_
