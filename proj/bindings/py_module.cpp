// Python bindings over the core operations: text extraction, segmentation,
// subword models, script profiles, BLEU, alignment and the pivot join.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mill/docalign.hpp"
#include "mill/filter.hpp"
#include "mill/html.hpp"
#include "mill/pivot.hpp"
#include "mill/script.hpp"
#include "mill/segment.hpp"
#include "mill/sentalign.hpp"
#include "mill/stats.hpp"
#include "mill/unicode_norm.hpp"
#include "mill/utf8.hpp"

namespace py = pybind11;
using namespace mill;

namespace {

Lang lang_arg(const std::string& code) { return parse_lang(code); }

Matrix matrix_arg(const std::vector<std::vector<double>>& rows) {
  Matrix m(static_cast<int>(rows.size()),
           rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw std::invalid_argument("ragged score matrix");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "parallel corpus mining core";

  py::register_exception<DataError>(m, "DataError");

  m.def("extract_text", &extract_text, py::arg("raw"), py::arg("is_html") = true);
  m.def("nfc", py::overload_cast<std::string_view>(&nfc), py::arg("text"));
  m.def("normalize_key", &normalize_key, py::arg("text"));

  m.def(
      "split_sentences",
      [](const std::string& text, const std::string& lang) {
        return split_sentences(text, lang_arg(lang));
      },
      py::arg("text"), py::arg("lang"));
  m.def("word_tokenize", [](const std::string& text) { return word_tokenize(text); },
        py::arg("text"));

  m.def(
      "classify_char",
      [](const std::string& ch) {
        auto cps = utf8::decode(ch);
        if (cps.size() != 1)
          throw std::invalid_argument("classify_char wants one character");
        return std::string(script_name(classify_char(cps[0])));
      },
      py::arg("ch"));
  m.def(
      "sentence_profile",
      [](const std::string& text) {
        ScriptProfile p = sentence_profile(text);
        std::map<std::string, double> fractions;
        for (const auto& [script, f] : p.fractions)
          fractions[std::string(script_name(script))] = f;
        return py::make_tuple(fractions, std::string(script_name(p.dominant)));
      },
      py::arg("text"), "Returns (fractions, dominant).");
  m.def(
      "expected_script",
      [](const std::string& lang) {
        return std::string(script_name(expected_script(lang_arg(lang))));
      },
      py::arg("lang"));
  m.def(
      "script_purity",
      [](const std::string& text, const std::string& lang) {
        return script_purity(text, lang_arg(lang));
      },
      py::arg("text"), py::arg("lang"));

  py::class_<SubwordModel>(m, "SubwordModel")
      .def_readonly("target_vocab", &SubwordModel::target_vocab)
      .def_readonly("merges", &SubwordModel::merges)
      .def_property_readonly(
          "vocab_size", [](const SubwordModel& m) { return m.vocab.size(); })
      .def("encode",
           [](const SubwordModel& model, const std::string& text) {
             return subword_encode(model, text);
           })
      .def("save", [](const SubwordModel& model, const std::filesystem::path& p) {
        save_subword(model, p);
      });
  m.def(
      "train_subword",
      [](const std::vector<std::string>& sentences, int target_vocab,
         const std::string& lang) {
        return train_subword(sentences, target_vocab, lang_arg(lang));
      },
      py::arg("sentences"), py::arg("target_vocab") = 4000, py::arg("lang") = "en");
  m.def("load_subword", &load_subword, py::arg("path"));
  m.def("subword_decode", &subword_decode, py::arg("symbols"));

  py::class_<Fraction>(m, "Fraction")
      .def_readonly("matches", &Fraction::matches)
      .def_readonly("total", &Fraction::total);
  py::class_<BleuScore>(m, "BleuScore")
      .def_readonly("value", &BleuScore::value)
      .def_readonly("precisions", &BleuScore::precisions)
      .def_readonly("brevity_penalty", &BleuScore::brevity_penalty)
      .def_readonly("hyp_len", &BleuScore::hyp_len)
      .def_readonly("ref_len", &BleuScore::ref_len);
  m.def(
      "modified_precision",
      [](const TokenList& hyp, const std::vector<TokenList>& refs, int order) {
        Fraction f = modified_precision(hyp, refs, order);
        return py::make_tuple(f.matches, f.total);
      },
      py::arg("hyp"), py::arg("refs"), py::arg("order"));
  m.def("corpus_bleu", &corpus_bleu, py::arg("pairs"), py::arg("max_n") = 4);
  m.def("sentence_bleu", &sentence_bleu, py::arg("hyp"), py::arg("ref"),
        py::arg("max_n") = 2);

  m.def(
      "anchor_align",
      [](const std::vector<std::vector<double>>& scores, double threshold) {
        return anchor_align(matrix_arg(scores), threshold);
      },
      py::arg("scores"), py::arg("threshold"));

  m.def(
      "apply_filter_policy",
      [](const std::string& src, const std::string& tgt, const std::string& src_lang,
         const std::string& tgt_lang, double min_ratio, double max_ratio,
         double min_script_purity, int min_tokens, int max_tokens, bool drop_url,
         bool drop_numeric) {
        FilterPolicy policy;
        policy.min_len_ratio = min_ratio;
        policy.max_len_ratio = max_ratio;
        policy.min_script_purity = min_script_purity;
        policy.min_tokens = min_tokens;
        policy.max_tokens = max_tokens;
        policy.drop_url_like = drop_url;
        policy.drop_numeric_only = drop_numeric;
        FilterDecision d =
            apply_policy(src, tgt, lang_arg(src_lang), lang_arg(tgt_lang), policy);
        return py::make_tuple(d.keep, std::string(drop_reason_name(d.reason)));
      },
      py::arg("src"), py::arg("tgt"), py::arg("src_lang"), py::arg("tgt_lang"),
      py::arg("min_ratio") = 1.0 / 3.0, py::arg("max_ratio") = 3.0,
      py::arg("min_script_purity") = 0.5, py::arg("min_tokens") = 1,
      py::arg("max_tokens") = 200, py::arg("drop_url") = true,
      py::arg("drop_numeric") = true, "Returns (keep, reason).");

  m.def(
      "compile_records",
      [](const std::map<std::string, std::vector<std::pair<std::string, std::string>>>&
             pairs_by_lang) {
        std::map<Lang, std::vector<std::pair<std::string, std::string>>> typed;
        for (const auto& [code, pairs] : pairs_by_lang)
          typed[lang_arg(code)] = pairs;
        CompileResult r = compile_records(typed);
        std::vector<std::pair<std::string, std::map<std::string, std::string>>> out;
        for (const MultiRecord& rec : r.records) {
          std::map<std::string, std::string> translations;
          for (const auto& [lang, text] : rec.translations)
            translations[std::string(lang_code(lang))] = text;
          out.emplace_back(rec.en_key, std::move(translations));
        }
        return py::make_tuple(out, r.collisions);
      },
      py::arg("pairs_by_lang"),
      "Joins (en, xx) pairs on the English key; returns (records, collisions).");

  m.def(
      "grid_counts",
      [](const std::map<std::string, std::vector<std::pair<std::string, std::string>>>&
             pairs_by_lang) {
        std::map<Lang, std::vector<std::pair<std::string, std::string>>> typed;
        for (const auto& [code, pairs] : pairs_by_lang)
          typed[lang_arg(code)] = pairs;
        GridCounts grid = grid_counts(compile_records(typed).records);
        std::map<std::pair<std::string, std::string>, long> out;
        for (size_t i = 0; i < kAllLangs.size(); ++i)
          for (size_t j = i + 1; j < kAllLangs.size(); ++j)
            out[{std::string(lang_code(kAllLangs[i])),
                 std::string(lang_code(kAllLangs[j]))}] =
                grid.at(kAllLangs[i], kAllLangs[j]);
        return out;
      },
      py::arg("pairs_by_lang"));

  py::class_<Vocabulary>(m, "Vocabulary")
      .def_property_readonly("size",
                             [](const Vocabulary& v) { return v.types.size(); })
      .def_readonly("token_total", &Vocabulary::token_total)
      .def("types", [](const Vocabulary& v) { return v.types; });
  m.def(
      "build_vocab",
      [](const std::vector<std::string>& sentences, const std::string& lang) {
        return build_vocab(sentences, lang_arg(lang));
      },
      py::arg("sentences"), py::arg("lang") = "en");
  m.def("oov_rate", &oov_rate, py::arg("train"), py::arg("test"));
}
