#include "lrcolor/report.hpp"

#include <sstream>

namespace lrcolor {

  using nlohmann::json;

  json to_json(Lemma2Audit const& audit) {
    json power = json::array();
    for (std::size_t i = 0; i < audit.power_violations.size() && i < kMaxWitnesses; ++i) {
      power.push_back({{"position", audit.power_violations[i].position},
                       {"root_len", audit.power_violations[i].root_len}});
    }
    json band = json::array();
    for (std::size_t i = 0; i < audit.band_violations.size() && i < kMaxWitnesses; ++i) {
      band.push_back({{"base_len", audit.band_violations[i].base_len},
                      {"return_len", audit.band_violations[i].return_len}});
    }
    json count = json::array();
    for (std::size_t i = 0; i < audit.count_violations.size() && i < kMaxWitnesses; ++i) {
      count.push_back({{"base_len", audit.count_violations[i].base_len},
                       {"count", audit.count_violations[i].count}});
    }
    return {{"K", audit.K},
            {"max_len", audit.max_len},
            {"power_free", audit.power_free()},
            {"length_band", audit.length_band()},
            {"count_bound", audit.count_bound()},
            {"power_violations", audit.power_violations.size()},
            {"band_violations", audit.band_violations.size()},
            {"count_violations", audit.count_violations.size()},
            {"power_witnesses", power},
            {"band_witnesses", band},
            {"count_witnesses", count}};
  }

  json to_json(VerificationReport const& report, VerifyNotes const& notes) {
    json doc;
    doc["command"]  = "verify";
    doc["word_id"]  = report.word_id;
    doc["K"]        = report.K;
    doc["K_source"] = notes.K_source;
    doc["K_margin_ok"]
        = notes.K_margin_ok ? json(*notes.K_margin_ok) : json(nullptr);
    doc["N"]        = report.N;
    doc["h"]        = report.h;
    doc["coloring"] = report.coloring;
    doc["status"]   = report.counterexample ? "counterexample" : "confirmed";
    if (report.counterexample) {
      doc["counterexample"] = {{"start", report.counterexample->start},
                               {"parts", report.counterexample->parts},
                               {"color", report.counterexample_color
                                             ? to_string(*report.counterexample_color)
                                             : std::string()}};
    } else {
      doc["counterexample"] = nullptr;
    }
    doc["prefixes_checked"]          = report.prefixes_checked;
    doc["factorizations_enumerated"] = report.factorizations_enumerated;
    doc["colors_observed"]           = report.colors_observed;
    doc["degenerate"]                = report.degenerate;
    doc["level0_codes"]              = notes.level0_codes;
    doc["buffer_length"]             = notes.buffer_length;
    doc["aperiodicity_screen"]
        = {{"detected_period",
            notes.detected_period ? json(*notes.detected_period) : json(nullptr)}};
    doc["lemma_audit"] = report.lemma_audit ? to_json(*report.lemma_audit) : json(nullptr);
    doc["timing"]      = report.elapsed_seconds;
    return doc;
  }

  std::string to_text(VerificationReport const& report, VerifyNotes const& notes) {
    std::ostringstream out;
    out << "word: " << report.word_id << "\n";
    out << "K = " << report.K << " (" << notes.K_source << ")";
    if (notes.K_margin_ok) {
      out << ", margin " << (*notes.K_margin_ok ? "ok" : "VIOLATED");
    }
    out << "\n";
    out << "horizon N = " << report.N << ", factorization length h = " << report.h
        << ", coloring = " << report.coloring << "\n";
    if (notes.detected_period) {
      out << "warning: prefix looks periodic with period " << *notes.detected_period << "\n";
    }
    out << "prefixes checked: " << report.prefixes_checked
        << ", factorizations enumerated: " << report.factorizations_enumerated
        << ", distinct colors: " << report.colors_observed << "\n";
    if (notes.level0_codes > 0) {
      out << "note: " << notes.level0_codes
          << " prefixes shorter than K received codes parsed over returns to p_0\n";
    }
    if (report.degenerate) {
      out << "note: degenerate run (h = 1 or a single color)\n";
    }
    if (report.lemma_audit) {
      auto const& a = *report.lemma_audit;
      out << "recurrence audit (max_len " << a.max_len << "): power-free "
          << (a.power_free() ? "yes" : "NO") << ", length band "
          << (a.length_band() ? "yes" : "NO") << ", count bound "
          << (a.count_bound() ? "yes" : "NO") << "\n";
    }
    if (report.counterexample) {
      out << "COUNTEREXAMPLE: parts";
      for (auto p : report.counterexample->parts) {
        out << ' ' << p;
      }
      out << " all colored "
          << (report.counterexample_color ? to_string(*report.counterexample_color) : "?")
          << "\n";
    } else {
      out << "confirmed: no monotone monochromatic factorization of length " << report.h
          << " on any prefix up to length " << report.N << "\n";
    }
    return out.str();
  }

  namespace {

    class SchemaCheck {
     public:
      explicit SchemaCheck(json const& doc) : _doc(doc) {}

      void field(char const* name, json::value_t type, bool nullable = false) {
        if (!_doc.contains(name)) {
          _problems.push_back(std::string("missing field \"") + name + "\"");
          return;
        }
        auto const& v = _doc.at(name);
        if (nullable && v.is_null()) {
          return;
        }
        bool ok = v.type() == type;
        if (type == json::value_t::number_unsigned) {
          ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
        } else if (type == json::value_t::number_float) {
          ok = v.is_number();
        }
        if (!ok) {
          _problems.push_back(std::string("field \"") + name + "\" has the wrong type");
        }
      }

      std::vector<std::string>& problems() {
        return _problems;
      }

     private:
      json const&              _doc;
      std::vector<std::string> _problems;
    };

    using T = json::value_t;

  }  // namespace

  std::vector<std::string> validate_machine_report(json const& doc) {
    if (!doc.is_object()) {
      return {"report is not an object"};
    }
    SchemaCheck check(doc);
    check.field("command", T::string);
    if (!doc.contains("command") || !doc["command"].is_string()) {
      return check.problems();
    }
    auto const command = doc["command"].get<std::string>();
    if (command == "verify") {
      for (auto name : {"word_id", "K_source", "coloring", "status"}) {
        check.field(name, T::string);
      }
      for (auto name : {"K", "N", "h", "prefixes_checked", "factorizations_enumerated",
                        "colors_observed", "level0_codes", "buffer_length"}) {
        check.field(name, T::number_unsigned);
      }
      check.field("degenerate", T::boolean);
      check.field("K_margin_ok", T::boolean, true);
      check.field("counterexample", T::object, true);
      check.field("aperiodicity_screen", T::object);
      check.field("lemma_audit", T::object, true);
      check.field("timing", T::number_float);
      if (doc.contains("status") && doc["status"].is_string()) {
        auto status = doc["status"].get<std::string>();
        if (status != "confirmed" && status != "counterexample") {
          check.problems().push_back("status must be confirmed or counterexample");
        }
        if ((status == "counterexample") != (doc.contains("counterexample")
                                             && doc["counterexample"].is_object())) {
          check.problems().push_back("counterexample must be present exactly when status says so");
        }
      }
      if (doc.contains("counterexample") && doc["counterexample"].is_object()) {
        SchemaCheck cex(doc["counterexample"]);
        cex.field("start", T::number_unsigned);
        cex.field("parts", T::array);
        cex.field("color", T::string);
        for (auto& p : cex.problems()) {
          check.problems().push_back("counterexample: " + p);
        }
      }
      if (doc.contains("lemma_audit") && doc["lemma_audit"].is_object()) {
        SchemaCheck audit(doc["lemma_audit"]);
        for (auto name : {"power_free", "length_band", "count_bound"}) {
          audit.field(name, T::boolean);
        }
        for (auto name : {"K", "max_len", "power_violations", "band_violations",
                          "count_violations"}) {
          audit.field(name, T::number_unsigned);
        }
        for (auto& p : audit.problems()) {
          check.problems().push_back("lemma_audit: " + p);
        }
      }
    } else if (command == "gen") {
      check.field("word_id", T::string);
      check.field("alphabet", T::string);
      check.field("n", T::number_unsigned);
      check.field("prefix", T::string);
    } else if (command == "returns") {
      check.field("word_id", T::string);
      check.field("base", T::string);
      check.field("window", T::number_unsigned);
      check.field("stable", T::boolean);
      check.field("returns", T::array);
      check.field("derived", T::array);
    } else if (command == "estimate-k") {
      check.field("word_id", T::string);
      check.field("k_hat", T::number_unsigned);
      check.field("margin_ok", T::boolean);
      check.field("window", T::number_unsigned);
      check.field("max_base_len", T::number_unsigned);
      check.field("samples", T::number_unsigned);
    } else if (command == "color") {
      check.field("word_id", T::string);
      check.field("K", T::number_unsigned);
      check.field("N", T::number_unsigned);
      check.field("colors", T::array);
      check.field("distinct_colors", T::number_unsigned);
      check.field("color_count_bound", T::string);
    } else if (command == "ramsey") {
      check.field("word_id", T::string);
      check.field("coloring", T::string);
      check.field("N", T::number_unsigned);
      check.field("t", T::number_unsigned);
      check.field("status", T::string);
      check.field("tail", T::object, true);
    } else {
      check.problems().push_back("unknown command \"" + command + "\"");
    }
    return check.problems();
  }

  std::string strip_timing(std::string const& machine_report) {
    auto doc = json::parse(machine_report);
    doc.erase("timing");
    return doc.dump(2);
  }

}  // namespace lrcolor
