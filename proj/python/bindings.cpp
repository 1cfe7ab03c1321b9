#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lqn/bounds.hpp"
#include "lqn/coloring.hpp"
#include "lqn/gf.hpp"
#include "lqn/io.hpp"
#include "lqn/mc.hpp"
#include "lqn/verify.hpp"

namespace py = pybind11;
using namespace lqn;

namespace {

AtomStructure structure_of(const LabelMatrix& m) { return AtomStructure::build(m.q(), m.n()); }

py::dict run_dict(const ColoringRun& run) {
    py::dict d;
    d["seed"] = run.seed;
    d["rounds"] = run.rounds_used;
    d["resamples"] = run.resample_count;
    d["outcome"] = run.outcome == ColoringOutcome::Success ? "success" : "exhausted";
    return d;
}

py::dict failure_dict(const FailureRecord& f, const AtomStructure& s) {
    py::dict d;
    d["u"] = f.u;
    d["v"] = f.v;
    d["condition"] = f.condition == FailCondition::Att ? "att" : "tatta";
    d["d"] = s.atom_name(f.need_d);
    d["e"] = s.atom_name(f.need_e);
    return d;
}

py::dict violation_dict(const Violation& v, const AtomStructure& s) {
    py::dict d;
    switch (v.kind) {
        case Violation::Kind::MalformedEntry: d["kind"] = "malformed_entry"; break;
        case Violation::Kind::ForbiddenTriangle: d["kind"] = "forbidden_triangle"; break;
        case Violation::Kind::MissingWitness: d["kind"] = "missing_witness"; break;
    }
    d["x"] = v.x;
    d["y"] = v.y;
    if (v.z) d["z"] = *v.z;
    d["label"] = s.atom_name(v.c);
    d["d"] = s.atom_name(v.d);
    d["e"] = s.atom_name(v.e);
    d["text"] = v.describe(s);
    return d;
}

}  // namespace

PYBIND11_MODULE(_lqn, m) {
    m.doc() = "representations and probabilistic thresholds for the algebras L(q,n)";

    py::register_exception<NotAPrimePower>(m, "NotAPrimePower", PyExc_ValueError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<SamePoint>(m, "SamePoint", PyExc_ValueError);
    py::register_exception<StaleFailure>(m, "StaleFailureError", PyExc_ValueError);
    py::register_exception<ShapeMismatch>(m, "ShapeMismatchError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "FileParseError", PyExc_ValueError);

    py::class_<Field>(m, "Field")
        .def(py::init(&Field::make), py::arg("q"))
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("k", &Field::k)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("reduction_polynomial", &Field::reduction_polynomial)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv);

    py::class_<AtomStructure>(m, "AtomStructure")
        .def(py::init(&AtomStructure::build), py::arg("q"), py::arg("n"))
        .def_property_readonly("q", &AtomStructure::q)
        .def_property_readonly("n", &AtomStructure::n)
        .def_property_readonly("atom_count", &AtomStructure::atom_count)
        .def("atom_names",
             [](const AtomStructure& s) {
                 std::vector<std::string> out;
                 for (AtomIdx i = 0; i < s.atom_count(); ++i) out.push_back(s.atom_name(i));
                 return out;
             })
        .def("comp",
             [](const AtomStructure& s, const std::string& x, const std::string& y) {
                 AtomIdx xi = s.parse_atom(x), yi = s.parse_atom(y);
                 if (xi == s.atom_count() || yi == s.atom_count())
                     throw py::value_error("unknown atom name");
                 std::vector<std::string> out;
                 for (AtomIdx z : s.comp_set(xi, yi)) out.push_back(s.atom_name(z));
                 return out;
             })
        .def("contains",
             [](const AtomStructure& s, const std::string& x, const std::string& y,
                const std::string& z) {
                 AtomIdx xi = s.parse_atom(x), yi = s.parse_atom(y), zi = s.parse_atom(z);
                 if (xi == s.atom_count() || yi == s.atom_count() || zi == s.atom_count())
                     throw py::value_error("unknown atom name");
                 return s.contains(xi, yi, zi);
             })
        .def("mandatory_witness_pairs",
             [](const AtomStructure& s, const std::string& c) {
                 AtomIdx ci = s.parse_atom(c);
                 if (ci == s.atom_count() || ci == AtomStructure::kIdentityIdx)
                     throw py::value_error("need a diversity atom name");
                 std::vector<std::pair<std::string, std::string>> out;
                 for (auto [d, e] : s.mandatory_witness_pairs(s.atom_at(ci)))
                     out.emplace_back(s.atom_name(s.index_of(d)), s.atom_name(s.index_of(e)));
                 return out;
             })
        .def("comp_json", &AtomStructure::comp_json);

    py::class_<LabelMatrix>(m, "LabelMatrix")
        .def_property_readonly("q", &LabelMatrix::q)
        .def_property_readonly("n", &LabelMatrix::n)
        .def_property_readonly("V", &LabelMatrix::vertex_count)
        .def_property_readonly("doubled", &LabelMatrix::doubled)
        .def("label",
             [](const LabelMatrix& mm, unsigned u, unsigned v) {
                 if (u >= mm.vertex_count() || v >= mm.vertex_count())
                     throw py::index_error("vertex out of range");
                 return structure_of(mm).atom_name(mm.label(u, v));
             })
        .def("same_labels", &LabelMatrix::same_labels)
        .def("save", [](const LabelMatrix& mm, const std::string& path) { save_matrix(mm, path); })
        .def_static("load", [](const std::string& path) { return load_matrix(path); });

    m.def("build_lyndon", &build_lyndon, py::arg("q"));
    m.def("build_doubled", &build_doubled, py::arg("q"));
    m.def("slope_index",
          [](const Field& f, FieldElem a1, FieldElem b1, FieldElem a2, FieldElem b2) {
              return slope_label(f, Point{0, a1, b1}, Point{0, a2, b2}).index;
          },
          py::arg("field"), py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"),
          "index i of the slope atom a_i joining (a1,b1) and (a2,b2); q means vertical");

    m.def("randomize_t_colors", &randomize_t_colors, py::arg("matrix"), py::arg("n"),
          py::arg("seed"));
    m.def("find_failures",
          [](const LabelMatrix& mm) {
              AtomStructure s = structure_of(mm);
              py::list out;
              for (const auto& f : find_failures(mm, s)) out.append(failure_dict(f, s));
              return out;
          },
          py::arg("matrix"));
    m.def("represent",
          [](unsigned long q, unsigned n, std::uint64_t seed, unsigned long max_rounds) {
              RepresentOptions opts;
              opts.max_rounds = max_rounds;
              RepresentResult r = represent(q, n, seed, opts);
              py::dict run = run_dict(r.run);
              run["infeasible_warning"] = r.infeasible_warning;
              return py::make_tuple(std::move(r.matrix), run);
          },
          py::arg("q"), py::arg("n"), py::arg("seed") = 0, py::arg("max_rounds") = 0);
    m.def("verify_full",
          [](const LabelMatrix& mm, bool exhaustive, unsigned threads) {
              AtomStructure s = structure_of(mm);
              VerifyOptions opts;
              opts.exhaustive = exhaustive;
              opts.threads = threads;
              VerifyResult r = verify_full(mm, s, opts);
              py::list v;
              for (const auto& viol : r.violations) v.append(violation_dict(viol, s));
              return py::make_tuple(r.valid, v);
          },
          py::arg("matrix"), py::arg("exhaustive") = false, py::arg("threads") = 1);
    m.def("verify_conditions_only",
          [](const LabelMatrix& mm) { return verify_conditions_only(mm, structure_of(mm)); },
          py::arg("matrix"));

    m.def("union_bound_value", &union_bound_value, py::arg("q"), py::arg("n"));
    m.def("lll_satisfied",
          [](unsigned long q, unsigned long n) {
              LllCheck c = lll_satisfied(q, n);
              return py::make_tuple(c.ok, c.lhs, c.rhs);
          },
          py::arg("q"), py::arg("n"));
    m.def("lll_product_ok", &lll_product_ok, py::arg("q"), py::arg("n"));
    m.def("is_prime_power", [](unsigned long q) { return is_prime_power(q); }, py::arg("q"));
    m.def("next_prime_power", &next_prime_power, py::arg("q"));
    m.def("threshold_table",
          [](unsigned long n_min, unsigned long n_max) {
              std::vector<std::tuple<unsigned long, unsigned long, unsigned long>> out;
              for (const auto& r : threshold_table(n_min, n_max))
                  out.emplace_back(r.n, r.q_union, r.q_lll);
              return out;
          },
          py::arg("n_min") = 2, py::arg("n_max") = 20);
    m.def("min_n_for_epsilon",
          [](double eps, unsigned long cap) -> py::object {
              auto n = min_n_for_epsilon(eps, cap);
              if (!n) return py::none();
              return py::int_(*n);
          },
          py::arg("eps"), py::arg("cap") = 1000000);
    m.def("figure1_csv", &figure1_csv, py::arg("n_min") = 2, py::arg("n_max") = 20);
    m.def("figure2_csv", &figure2_csv, py::arg("eps_grid"), py::arg("cap") = 1000000);
    m.def("bounds_report_json",
          [](unsigned long q, unsigned long n) { return bounds_report(q, n).to_json(); },
          py::arg("q"), py::arg("n"));
    m.def("mc_estimate",
          [](unsigned long q, unsigned long n, unsigned long trials, std::uint64_t seed,
             unsigned threads) {
              McStats st = mc_estimate(q, n, trials, seed, threads);
              py::dict d;
              d["q"] = st.q;
              d["n"] = st.n;
              d["trials"] = st.trials;
              d["seed"] = st.base_seed;
              d["att_empirical"] = st.att_freq();
              d["att_analytic"] = st.att_analytic();
              d["att_sigma"] = st.att_sigma();
              d["tatta_empirical"] = st.tatta_freq();
              d["tatta_analytic"] = st.tatta_analytic();
              d["tatta_sigma"] = st.tatta_sigma();
              d["any_fail"] = st.any_fail_freq();
              d["any_fail_sigma"] = st.any_fail_sigma();
              d["union_bound"] = st.union_bound;
              return d;
          },
          py::arg("q"), py::arg("n"), py::arg("trials") = 10000, py::arg("seed") = 0,
          py::arg("threads") = 1);
}
