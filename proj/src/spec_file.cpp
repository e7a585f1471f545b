#include "lrcolor/spec_file.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "lrcolor/error.hpp"

namespace lrcolor {

  namespace {

    [[noreturn]] void fail(YAML::Node const& at, std::string const& what) {
      auto const mark = at.Mark();
      std::string where;
      if (mark.line >= 0) {
        where = "line " + std::to_string(mark.line + 1) + ": ";
      }
      throw Error(Errc::SpecParse, where + what);
    }

    YAML::Node require(YAML::Node const& root, char const* field) {
      auto node = root[field];
      if (!node) {
        fail(root, std::string("missing field \"") + field + "\"");
      }
      return node;
    }

    std::string scalar(YAML::Node const& root, char const* field) {
      auto node = require(root, field);
      if (!node.IsScalar()) {
        fail(node, std::string("field \"") + field + "\" must be a scalar");
      }
      return node.as<std::string>();
    }

    Alphabet parse_alphabet(YAML::Node const& root) {
      auto        node = require(root, "alphabet");
      std::string names;
      if (node.IsSequence()) {
        for (auto const& letter : node) {
          auto s = letter.as<std::string>();
          if (s.size() != 1) {
            fail(letter, "alphabet letters must be single characters, got \"" + s + "\"");
          }
          names += s;
        }
      } else if (node.IsScalar()) {
        names = node.as<std::string>();
      } else {
        fail(node, "field \"alphabet\" must be a list of letters");
      }
      try {
        return Alphabet(names);
      } catch (Error const& e) {
        fail(node, std::string("alphabet: ") + e.detail());
      }
    }

    Word encode_field(YAML::Node const& root, char const* field, Alphabet const& alphabet,
                      bool allow_empty) {
      auto node = root[field];
      if (!node && allow_empty) {
        return {};
      }
      auto text = scalar(root, field);
      if (text.empty() && !allow_empty) {
        fail(root[field], std::string("field \"") + field + "\" must be nonempty");
      }
      try {
        return alphabet.encode(text);
      } catch (Error const& e) {
        fail(root[field], std::string(field) + ": " + e.detail());
      }
    }

    WordSource parse_source(YAML::Node const& root) {
      auto const kind     = scalar(root, "kind");
      auto const alphabet = parse_alphabet(root);
      if (kind == "substitution") {
        auto images = require(root, "images");
        if (!images.IsMap()) {
          fail(images, "field \"images\" must map letters to words");
        }
        std::vector<Word> table(alphabet.size());
        for (auto const& entry : images) {
          auto key = entry.first.as<std::string>();
          auto id  = key.size() == 1 ? alphabet.id(key[0]) : std::nullopt;
          if (!id) {
            fail(entry.first, "images: \"" + key + "\" is not a letter of the alphabet");
          }
          try {
            table[*id] = alphabet.encode(entry.second.as<std::string>());
          } catch (Error const& e) {
            fail(entry.second, std::string("images: ") + e.detail());
          }
        }
        for (std::size_t a = 0; a < table.size(); ++a) {
          if (table[a].empty()) {
            fail(images, std::string("images: no image for letter '")
                             + alphabet.name(static_cast<Symbol>(a)) + "'");
          }
        }
        auto seed_text = scalar(root, "seed");
        auto seed      = seed_text.size() == 1 ? alphabet.id(seed_text[0]) : std::nullopt;
        if (!seed) {
          fail(root["seed"], "seed: \"" + seed_text + "\" is not a letter of the alphabet");
        }
        return SubstitutionFixedPoint{Substitution(alphabet, std::move(table)), *seed};
      }
      if (kind == "sturmian") {
        auto node = require(root, "coefficients");
        if (!node.IsSequence() || node.size() == 0) {
          fail(node, "field \"coefficients\" must be a nonempty list of positive integers");
        }
        std::vector<std::size_t> coefficients;
        for (auto const& c : node) {
          long long v = 0;
          try {
            v = c.as<long long>();
          } catch (YAML::Exception const&) {
            fail(c, "coefficients: \"" + c.as<std::string>() + "\" is not an integer");
          }
          if (v < 1) {
            fail(c, "coefficients: values must be at least 1");
          }
          coefficients.push_back(static_cast<std::size_t>(v));
        }
        if (alphabet.size() != 2) {
          fail(root["alphabet"], "sturmian words need exactly two letters");
        }
        return SturmianCF{alphabet, std::move(coefficients)};
      }
      if (kind == "eventually_periodic") {
        return EventuallyPeriodic{alphabet, encode_field(root, "preperiod", alphabet, true),
                                  encode_field(root, "period", alphabet, false)};
      }
      if (kind == "literal") {
        return Literal{alphabet, encode_field(root, "text", alphabet, true)};
      }
      fail(root["kind"], "unknown kind \"" + kind
                             + "\" (expected substitution, sturmian, eventually_periodic or literal)");
    }

  }  // namespace

  WordSpec parse_word_spec(std::string_view text, std::string_view default_id) {
    YAML::Node root;
    try {
      root = YAML::Load(std::string(text));
    } catch (YAML::Exception const& e) {
      throw Error(Errc::SpecParse, e.what());
    }
    if (!root.IsMap()) {
      throw Error(Errc::SpecParse, "a word spec must be a mapping of fields");
    }
    WordSpec spec{std::string(default_id), parse_source(root)};
    if (root["id"]) {
      spec.id = scalar(root, "id");
    }
    return spec;
  }

  WordSpec load_word_spec(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(Errc::SpecParse, "cannot open " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      return parse_word_spec(text.str(), path.stem().string());
    } catch (Error const& e) {
      if (e.code() == Errc::SpecParse) {
        throw Error(Errc::SpecParse, path.string() + ": " + e.detail());
      }
      throw;
    }
  }

  std::string literal_spec_text(std::string_view id,
                                Alphabet const&  alphabet,
                                std::string_view text) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << std::string(id);
    out << YAML::Key << "kind" << YAML::Value << "literal";
    out << YAML::Key << "alphabet" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (char c : alphabet.names()) {
      out << std::string(1, c);
    }
    out << YAML::EndSeq;
    out << YAML::Key << "text" << YAML::Value << YAML::DoubleQuoted << std::string(text);
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
  }

}  // namespace lrcolor
