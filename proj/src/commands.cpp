#include "lrcolor/commands.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lrcolor/coloring.hpp"
#include "lrcolor/error.hpp"
#include "lrcolor/report.hpp"
#include "lrcolor/returns.hpp"
#include "lrcolor/spec_file.hpp"
#include "lrcolor/verifier.hpp"

namespace lrcolor {

  using nlohmann::json;

  namespace {

    constexpr std::size_t kEstimateBufferLength = 16384;
    constexpr std::size_t kAuditMaxLen          = 20;
    constexpr std::size_t kDerivedHead          = 20;

    // Up to len letters; a literal simply stops at its end.
    PrefixBuffer materialize(WordSource const& source, std::size_t len) {
      if (auto limit = source_limit(source)) {
        len = std::min(len, *limit);
      }
      return prefix(source, len);
    }

    void emit(RunConfig const& config, std::ostream& out, std::string const& text) {
      if (config.out) {
        std::ofstream file(*config.out, std::ios::binary);
        if (!file) {
          throw Error(Errc::InvalidArgument, "cannot write " + config.out->string());
        }
        file << text;
      } else {
        out << text;
      }
    }

    std::string render(json const& doc) {
      return doc.dump(2) + "\n";
    }

    void check_config(RunConfig const& config) {
      if (config.K && *config.K < 2) {
        throw Error(Errc::InvalidArgument, "--k must be at least 2");
      }
      if (config.h && *config.h < 1) {
        throw Error(Errc::InvalidArgument, "--h must be at least 1");
      }
      if (config.max_base < 1) {
        throw Error(Errc::InvalidArgument, "--max-base must be at least 1");
      }
    }

    struct ResolvedK {
      std::size_t         K = 0;
      std::string         source;
      std::optional<bool> margin_ok;
    };

    ResolvedK resolve_K(RunConfig const& config, WordSource const& source) {
      if (config.K) {
        return {*config.K, "override", std::nullopt};
      }
      auto const buffer = materialize(source, kEstimateBufferLength);
      auto const est    = estimate_K(buffer, config.max_base);
      return {est.k_hat, "estimate", est.margin_ok};
    }

    std::shared_ptr<ColoringContext const> make_context(RunConfig const& config,
                                                        WordSource const& source,
                                                        std::size_t       K,
                                                        std::size_t       N) {
      std::size_t const len    = config.window.value_or((K + 2) * N);
      auto              buffer = materialize(source, len);
      return std::make_shared<ColoringContext const>(build_context(std::move(buffer), K, N));
    }

    FactorColoring make_coloring(ColoringChoice                                choice,
                                 std::shared_ptr<ColoringContext const> const& ctx) {
      switch (choice) {
        case ColoringChoice::FirstLetter:
          return first_letter_coloring();
        case ColoringChoice::Constant:
          return constant_coloring();
        case ColoringChoice::Theorem:
          break;
      }
      return theorem_coloring(ctx);
    }

    int guarded(std::ostream& err, std::function<int()> const& body) {
      try {
        return body();
      } catch (Error const& e) {
        err << "error: " << e.what() << "\n";
      } catch (std::exception const& e) {
        err << "internal error: " << e.what() << "\n";
      }
      return kExitError;
    }

  }  // namespace

  int cmd_gen(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      check_config(config);
      auto const        spec = load_word_spec(config.spec_path);
      std::size_t const n    = config.n.value_or(100);
      if (n == 0) {
        emit(config, out, "");
        return kExitOk;
      }
      auto const  buffer   = prefix(spec.source, n);
      auto const& alphabet = buffer.alphabet();
      if (config.format == ReportFormat::Machine) {
        emit(config, out,
             render({{"command", "gen"},
                     {"word_id", spec.id},
                     {"alphabet", alphabet.names()},
                     {"n", n},
                     {"prefix", buffer.str()}}));
        return kExitOk;
      }
      std::string header = "alphabet:";
      for (char c : alphabet.names()) {
        header += ' ';
        header += c;
      }
      emit(config, out, header + "\n" + buffer.str() + "\n");
      return kExitOk;
    });
  }

  int cmd_returns(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      check_config(config);
      auto const        spec     = load_word_spec(config.spec_path);
      std::size_t const base_len = config.n.value_or(1);
      if (base_len == 0) {
        throw Error(Errc::InvalidArgument, "--n (base length) must be positive");
      }
      std::size_t const window = config.window.value_or(std::max<std::size_t>(1024, 64 * base_len));
      auto const        buffer = materialize(spec.source, window);
      auto const        sys    = return_system(buffer, base_len, buffer.size());
      auto const&       alpha  = buffer.alphabet();

      if (config.format == ReportFormat::Machine) {
        json returns = json::array();
        for (auto const& r : sys.returns) {
          returns.push_back(alpha.decode(r));
        }
        emit(config, out,
             render({{"command", "returns"},
                     {"word_id", spec.id},
                     {"base", alpha.decode(sys.base)},
                     {"window", sys.window},
                     {"stable", sys.stable},
                     {"returns", returns},
                     {"derived", sys.derived}}));
        return kExitOk;
      }
      std::ostringstream text;
      text << "base: " << alpha.decode(sys.base) << " (length " << base_len << "), window "
           << sys.window << ", stable: " << (sys.stable ? "yes" : "no") << "\n";
      for (std::size_t i = 0; i < sys.returns.size(); ++i) {
        text << (i == 0 ? "" : ", ") << i << ": " << alpha.decode(sys.returns[i]);
      }
      text << "; derived:";
      for (std::size_t j = 0; j < sys.derived.size() && j < kDerivedHead; ++j) {
        text << ' ' << sys.derived[j];
      }
      if (sys.derived.size() > kDerivedHead) {
        text << " ...";
      }
      text << "\n";
      emit(config, out, text.str());
      return kExitOk;
    });
  }

  int cmd_estimate_k(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      check_config(config);
      auto const        spec     = load_word_spec(config.spec_path);
      std::size_t const max_base = config.n.value_or(config.max_base);
      auto const buffer = materialize(spec.source, config.window.value_or(kEstimateBufferLength));
      auto const est    = estimate_K(buffer, max_base);

      KSample const* worst = nullptr;
      for (auto const& s : est.samples) {
        if (worst == nullptr || s.max_return * worst->length > worst->max_return * s.length) {
          worst = &s;
        }
      }
      if (config.format == ReportFormat::Machine) {
        json doc = {{"command", "estimate-k"},
                    {"word_id", spec.id},
                    {"k_hat", est.k_hat},
                    {"margin_ok", est.margin_ok},
                    {"window", est.window},
                    {"max_base_len", max_base},
                    {"samples", est.samples.size()}};
        if (worst != nullptr) {
          doc["worst"] = {{"factor", buffer.alphabet().decode(worst->factor)},
                          {"max_return", worst->max_return}};
        }
        emit(config, out, render(doc));
        return kExitOk;
      }
      std::ostringstream text;
      text << "k_hat = " << est.k_hat << " (margin " << (est.margin_ok ? "ok" : "VIOLATED")
           << "), window " << est.window << ", " << est.samples.size()
           << " factors up to length " << max_base << "\n";
      if (worst != nullptr) {
        text << "largest ratio: factor " << buffer.alphabet().decode(worst->factor)
             << " has a return of length " << worst->max_return << "\n";
      }
      emit(config, out, text.str());
      return kExitOk;
    });
  }

  int cmd_color(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      check_config(config);
      auto const        spec = load_word_spec(config.spec_path);
      std::size_t const N    = config.n.value_or(81);
      auto const        k    = resolve_K(config, spec.source);
      auto const        ctx  = make_context(config, spec.source, k.K, N);

      std::vector<std::string> colors;
      std::vector<Color>       distinct;
      for (std::size_t len = 1; len <= N; ++len) {
        auto c = classify(*ctx, ctx->buffer().view(0, len));
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) {
          distinct.push_back(c);
        }
        colors.push_back(to_string(c));
      }
      std::string const bound = color_count_bound(k.K).str();
      if (config.format == ReportFormat::Machine) {
        emit(config, out,
             render({{"command", "color"},
                     {"word_id", spec.id},
                     {"K", k.K},
                     {"N", N},
                     {"colors", colors},
                     {"distinct_colors", distinct.size()},
                     {"color_count_bound", bound}}));
        return kExitOk;
      }
      std::ostringstream text;
      text << "K = " << k.K << " (" << k.source << "), prefixes 1.." << N << "\n";
      for (std::size_t len = 1; len <= N; ++len) {
        text << len << ": " << colors[len - 1] << "\n";
      }
      text << "distinct prefix colors: " << distinct.size() << "\n";
      text << "color count bound k (" << bound.size() << " digits): " << bound << "\n";
      emit(config, out, text.str());
      return kExitOk;
    });
  }

  int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      check_config(config);
      auto const        spec = load_word_spec(config.spec_path);
      std::size_t const N    = config.n.value_or(200);
      auto const        k    = resolve_K(config, spec.source);
      std::size_t const h    = config.h.value_or(k.K + 1);
      if (N < h) {
        throw Error(Errc::InvalidArgument,
                    "horizon " + std::to_string(N) + " is below h = " + std::to_string(h));
      }
      auto const ctx      = make_context(config, spec.source, k.K, N);
      auto const coloring = make_coloring(config.coloring, ctx);

      CheckOptions options;
      options.parallel = config.parallel;
      auto report      = check_theorem(coloring, ctx->buffer(), N, h, options);
      report.word_id   = spec.id;
      report.K         = k.K;

      std::size_t const audit_len = std::min(kAuditMaxLen, ctx->buffer().size() / (k.K + 1));
      if (audit_len > 0) {
        report.lemma_audit = audit_lemma2(ctx->buffer(), k.K, audit_len);
      }

      VerifyNotes notes;
      notes.buffer_length   = ctx->buffer().size();
      notes.K_source        = k.source;
      notes.K_margin_ok     = k.margin_ok;
      // A word with constant K contains no (K+1)-th power, so only a period
      // repeated at least K+1 times across the buffer is evidence of periodicity.
      if (auto p = detect_period(ctx->buffer().view()); p && (k.K + 1) * *p <= notes.buffer_length) {
        notes.detected_period = p;
      }
      if (config.coloring == ColoringChoice::Theorem) {
        for (std::size_t len = 1; len < k.K && len <= N; ++len) {
          if (std::holds_alternative<CodeColor>(classify(*ctx, ctx->buffer().view(0, len)))) {
            ++notes.level0_codes;
          }
        }
      }

      emit(config, out,
           config.format == ReportFormat::Machine ? render(to_json(report, notes))
                                                  : to_text(report, notes));
      return report.counterexample ? kExitNegative : kExitOk;
    });
  }

  int cmd_ramsey(RunConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      check_config(config);
      auto const        spec = load_word_spec(config.spec_path);
      std::size_t const N    = config.n.value_or(2000);
      std::size_t const t    = config.t.value_or(10);
      if (t < 1) {
        throw Error(Errc::InvalidArgument, "--t must be at least 1");
      }

      std::shared_ptr<ColoringContext const> ctx;
      std::optional<PrefixBuffer>            plain;
      if (config.coloring == ColoringChoice::Theorem) {
        ctx = make_context(config, spec.source, resolve_K(config, spec.source).K, N);
      } else {
        plain = materialize(spec.source, config.window.value_or(N));
      }
      PrefixBuffer const& buffer   = ctx ? ctx->buffer() : *plain;
      auto const          coloring = make_coloring(config.coloring, ctx);

      auto const tail = find_ramsey_tail(coloring, buffer, N, t);
      if (tail && !verify_strongly_monochromatic(coloring, buffer, tail->start, tail->parts)) {
        throw std::logic_error("tail failed strong monochromaticity re-verification");
      }

      if (config.format == ReportFormat::Machine) {
        json doc = {{"command", "ramsey"},
                    {"word_id", spec.id},
                    {"coloring", coloring.name()},
                    {"N", N},
                    {"t", t},
                    {"status", tail ? "found" : "horizon insufficient"}};
        if (tail) {
          doc["tail"] = {{"start", tail->start},
                         {"parts", tail->parts},
                         {"color", to_string(coloring(buffer.view(tail->start, tail->parts[0])))}};
        } else {
          doc["tail"] = nullptr;
        }
        emit(config, out, render(doc));
      } else if (tail) {
        std::ostringstream text;
        text << "tail start i = " << tail->start << ", " << tail->parts.size() << " blocks:";
        for (auto p : tail->parts) {
          text << ' ' << p;
        }
        text << "\ncolor " << to_string(coloring(buffer.view(tail->start, tail->parts[0])))
             << ", strongly monochromatic: verified\n";
        emit(config, out, text.str());
      } else {
        emit(config, out,
             "horizon insufficient: no " + std::to_string(t) + "-block tail found up to N = "
                 + std::to_string(N) + "\n");
      }
      return tail ? kExitOk : kExitNegative;
    });
  }

  int run_command(RunConfig const& config, std::ostream& out, std::ostream& err) {
    if (config.command == "gen") {
      return cmd_gen(config, out, err);
    }
    if (config.command == "returns") {
      return cmd_returns(config, out, err);
    }
    if (config.command == "estimate-k") {
      return cmd_estimate_k(config, out, err);
    }
    if (config.command == "color") {
      return cmd_color(config, out, err);
    }
    if (config.command == "verify") {
      return cmd_verify(config, out, err);
    }
    if (config.command == "ramsey") {
      return cmd_ramsey(config, out, err);
    }
    err << "error: unknown command \"" << config.command << "\"\n";
    return kExitError;
  }

}  // namespace lrcolor
