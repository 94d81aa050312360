#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mtmetrics/bleu.hpp"
#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"
#include "mtmetrics/hlepor.hpp"
#include "mtmetrics/lexmetrics.hpp"
#include "mtmetrics/textnorm.hpp"

namespace py = pybind11;
using namespace mtmetrics;

namespace {

using Tokens = std::vector<std::string>;

TokenizerConfig make_tokenizer(const std::string& scheme, bool lowercase) {
  return TokenizerConfig(parse_scheme(scheme), lowercase);
}

py::dict breakdown_dict(const HleporBreakdown& b) {
  py::dict d;
  d["lp"] = b.lp;
  d["npd"] = b.npd;
  d["npos_penal"] = b.npos_penal;
  d["precision"] = b.precision;
  d["recall"] = b.recall;
  d["hpr"] = b.hpr;
  d["score"] = b.score;
  d["aligned"] = b.aligned;
  return d;
}

AlignmentMap to_alignment(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  return AlignmentMap{pairs};
}

}  // namespace

PYBIND11_MODULE(_mtmetrics, m) {
  m.doc() = "Machine translation metrics: hLEPOR, BLEU, ROUGE-L and exact-match METEOR.";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.attr("__version__") = std::string(kToolkitVersion);

  m.def("tokenize",
        [](const std::string& text, const std::string& scheme, bool lowercase) {
          return tokenize(text, make_tokenizer(scheme, lowercase)).tokens();
        },
        py::arg("text"), py::arg("scheme") = "13a", py::arg("lowercase") = true);

  m.def("extract_ngrams",
        [](const Tokens& tokens, std::size_t n) {
          py::dict out;
          for (const auto& [gram, count] : extract_ngrams(TokenSequence(tokens), n).counts) {
            out[py::tuple(py::cast(gram))] = count;
          }
          return out;
        },
        py::arg("tokens"), py::arg("n"));

  py::class_<HleporParams>(m, "HleporParams")
      .def(py::init([](double alpha, double beta, int n, double w_lp, double w_npp, double w_hpr) {
             HleporParams p{alpha, beta, n, w_lp, w_npp, w_hpr};
             p.validate();
             return p;
           }),
           py::arg("alpha") = 9.0, py::arg("beta") = 1.0, py::arg("n") = 2,
           py::arg("w_lp") = 2.0, py::arg("w_npp") = 1.0, py::arg("w_hpr") = 3.0)
      .def_readonly("alpha", &HleporParams::alpha)
      .def_readonly("beta", &HleporParams::beta)
      .def_readonly("n", &HleporParams::n)
      .def_readonly("w_lp", &HleporParams::w_lp)
      .def_readonly("w_npp", &HleporParams::w_npp)
      .def_readonly("w_hpr", &HleporParams::w_hpr)
      .def("as_tuple",
           [](const HleporParams& p) {
             return py::make_tuple(p.alpha, p.beta, p.n, p.w_lp, p.w_npp, p.w_hpr);
           })
      .def("__eq__", [](const HleporParams& a, const HleporParams& b) { return a == b; })
      .def("__repr__", [](const HleporParams& p) { return "HleporParams(" + p.to_string() + ")"; });

  m.def("preset", [](const std::string& name) { return preset(name); }, py::arg("lang_pair"));
  m.def("language_pairs", [] {
    std::vector<std::string> out;
    for (auto p : all_language_pairs()) out.emplace_back(language_pair_name(p));
    return out;
  });

  m.def("length_penalty", &length_penalty, py::arg("hyp_len"), py::arg("ref_len"));
  m.def("align",
        [](const Tokens& hyp, const Tokens& ref) {
          return align(TokenSequence(hyp), TokenSequence(ref)).pairs;
        },
        py::arg("hyp"), py::arg("ref"));
  m.def("npd",
        [](const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t hyp_len,
           std::size_t ref_len) { return npd(to_alignment(pairs), hyp_len, ref_len); },
        py::arg("alignment"), py::arg("hyp_len"), py::arg("ref_len"));
  m.def("hpr", &hpr, py::arg("aligned"), py::arg("hyp_len"), py::arg("ref_len"),
        py::arg("alpha"), py::arg("beta"));
  m.def("hlepor_sentence",
        [](const Tokens& hyp, const Tokens& ref, const HleporParams& params) {
          return breakdown_dict(hlepor_sentence(TokenSequence(hyp), TokenSequence(ref), params));
        },
        py::arg("hyp"), py::arg("ref"), py::arg("params") = preset(LanguagePair::kEnEs));
  m.def("hlepor_corpus",
        [](const std::vector<std::pair<Tokens, Tokens>>& pairs, const HleporParams& params,
           unsigned threads) {
          std::vector<SegmentPair> segs;
          segs.reserve(pairs.size());
          for (const auto& [h, r] : pairs) segs.emplace_back(TokenSequence(h), TokenSequence(r));
          py::gil_scoped_release release;
          return hlepor_corpus(segs, params, threads);
        },
        py::arg("pairs"), py::arg("params") = preset(LanguagePair::kEnEs), py::arg("threads") = 1);

  m.def("_bleu_corpus",
        [](const Tokens& hyps, const Tokens& refs, std::size_t max_n, const std::string& smoothing,
           double k, const std::string& scheme, bool lowercase, unsigned threads) {
          BleuConfig cfg;
          cfg.max_n = max_n;
          cfg.smoothing = {parse_smoothing(smoothing), k};
          cfg.tokenizer = make_tokenizer(scheme, lowercase);
          BleuReport report;
          {
            py::gil_scoped_release release;
            report = bleu_corpus(hyps, refs, cfg, threads);
          }
          return to_json(report).dump();
        });
  m.def("bleu_signature",
        [](std::size_t max_n, const std::string& smoothing, const std::string& scheme,
           bool lowercase) {
          BleuConfig cfg;
          cfg.max_n = max_n;
          cfg.smoothing.method = parse_smoothing(smoothing);
          cfg.tokenizer = make_tokenizer(scheme, lowercase);
          return signature(cfg);
        },
        py::arg("max_n") = 4, py::arg("smoothing") = "none", py::arg("tokenize") = "13a",
        py::arg("lowercase") = true);

  m.def("lcs_length",
        [](const Tokens& a, const Tokens& b) { return lcs_length(TokenSequence(a), TokenSequence(b)); },
        py::arg("a"), py::arg("b"));
  m.def("rouge_l_f1",
        [](const Tokens& hyp, const Tokens& ref) {
          return rouge_l_f1(TokenSequence(hyp), TokenSequence(ref)).f1;
        },
        py::arg("hyp"), py::arg("ref"));
  m.def("meteor_exact",
        [](const Tokens& hyp, const Tokens& ref, double alpha, double beta, double gamma) {
          return meteor_exact(TokenSequence(hyp), TokenSequence(ref), MeteorParams{alpha, beta, gamma});
        },
        py::arg("hyp"), py::arg("ref"), py::arg("alpha") = 0.9, py::arg("beta") = 3.0,
        py::arg("gamma") = 0.5);

  m.def("improvement_rate",
        [](double before, double after, int decimals) {
          return improvement_rate(before, after, RoundingPolicy{decimals});
        },
        py::arg("before"), py::arg("after"), py::arg("decimals") = 2);

  m.def("_winner_matrix",
        [](const std::string& table_json, std::optional<int> round) {
          WinnerOptions options;
          if (round) options.rounding = RoundingPolicy{*round};
          return to_json(winner_matrix(ScoreTable::from_json(nlohmann::json::parse(table_json)),
                                       options))
              .dump();
        });

  m.def("_evaluate",
        [](const Tokens& hyps, const Tokens& refs, const std::string& metrics,
           const std::string& scheme, bool lowercase, const std::string& lang_pair,
           std::optional<HleporParams> hlepor, std::size_t max_n, const std::string& smoothing,
           double k, bool segment_bleu, unsigned threads) {
          EvalConfig cfg;
          cfg.tokenizer = make_tokenizer(scheme, lowercase);
          cfg.hlepor = preset(lang_pair);
          cfg.lang_pair = lang_pair;
          if (hlepor) {
            cfg.hlepor = *hlepor;
            cfg.lang_pair.clear();
          }
          cfg.bleu_max_n = max_n;
          cfg.bleu_smoothing = {parse_smoothing(smoothing), k};
          cfg.segment_bleu = segment_bleu;
          cfg.threads = threads;
          const auto list = parse_metric_list(metrics);
          EvaluationResult result;
          {
            py::gil_scoped_release release;
            result = evaluate_corpus(hyps, refs, list, cfg);
          }
          return to_json(result, true).dump();
        });
}
