#ifndef LRCOLOR_RETURNS_HPP_
#define LRCOLOR_RETURNS_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "lrcolor/word.hpp"

namespace lrcolor {

  using ReturnIndex = std::uint32_t;
  using IndexWord   = std::vector<ReturnIndex>;

  //! Every position p with w[p, p + |u|) = u, overlaps included. Only
  //! occurrences lying entirely inside w are reported.
  [[nodiscard]] std::vector<std::size_t> occurrences(WordView w, WordView u);

  //! The gaps between consecutive occurrences of u inside w, as distinct words
  //! listed by first occurrence. Empty when u occurs fewer than twice.
  [[nodiscard]] std::vector<Word> gap_returns(WordView w, WordView u);

  //! Returns to a prefix u of the analysed word, and the tiling
  //! x[0, last) = returns[derived[0]] returns[derived[1]] ...
  struct ReturnSystem {
    Word              base;
    std::vector<Word> returns;     // distinct, ordered by first occurrence
    IndexWord         derived;     // derived[j] tiles [boundaries[j], boundaries[j+1])
    std::vector<std::size_t> boundaries;  // occurrences of base, boundaries[0] == 0
    std::size_t       window = 0;
    bool              stable = false;

    [[nodiscard]] std::size_t size() const noexcept {
      return returns.size();
    }
    //! Index j with boundaries[j] == pos.
    [[nodiscard]] std::optional<std::size_t> boundary_index(std::size_t pos) const;
  };

  //! Return system of buffer[0, base_len) computed from the occurrences inside
  //! buffer[0, window). stable is true iff window / 2 yields the same returns.
  //! Throws NotAPrefix, OutOfRange (window beyond buffer), WindowTooSmall
  //! (fewer than two occurrences).
  [[nodiscard]] ReturnSystem return_system(PrefixBuffer const& buffer,
                                           WordView            base,
                                           std::size_t         window);
  [[nodiscard]] ReturnSystem return_system(PrefixBuffer const& buffer,
                                           std::size_t         base_len,
                                           std::size_t         window);

  //! Concatenation of the indexed returns. Throws IndexOutOfRange.
  [[nodiscard]] Word theta(ReturnSystem const& system, std::span<ReturnIndex const> r);

  //! The index word r with theta(r) = v, or nullopt when v is not a
  //! concatenation of returns. Prefixes of the analysed word are read off the
  //! boundaries; other words are parsed against the return set.
  [[nodiscard]] std::optional<IndexWord> parse_by_returns(ReturnSystem const& system,
                                                          WordView            v);

  //! For each return i of sys_u, the index word over returns of sys_v that
  //! spells it. Requires |base_v| <= |base_u|, base_v a prefix of base_u and
  //! both systems stable. Throws Unstable, NotAPrefix or AlignmentFailure.
  [[nodiscard]] std::vector<IndexWord> lambda_morphism(ReturnSystem const& sys_u,
                                                       ReturnSystem const& sys_v);

  struct KSample {
    Word        factor;
    std::size_t length      = 0;
    std::size_t max_return  = 0;
    std::size_t min_return  = 0;
    std::size_t return_count = 0;
  };

  struct KEstimate {
    std::size_t          k_hat = 2;
    std::vector<KSample> samples;
    bool                 margin_ok = false;
    std::size_t          window    = 0;
  };

  //! Empirical linear-recurrence constant from every factor of length at most
  //! max_base_len. The window grows until the factor set and every return set
  //! agree between window/2 and window; throws Unstable if the buffer runs out
  //! first.
  [[nodiscard]] KEstimate estimate_K(PrefixBuffer const& buffer, std::size_t max_base_len);

}  // namespace lrcolor

#endif  // LRCOLOR_RETURNS_HPP_
