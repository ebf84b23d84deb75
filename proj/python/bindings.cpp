#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ttc/birkhoff.hpp"
#include "ttc/concat.hpp"
#include "ttc/families.hpp"
#include "ttc/growth.hpp"
#include "ttc/io.hpp"
#include "ttc/treecode.hpp"
#include "ttc/ttn.hpp"

namespace py = pybind11;
using namespace ttc;

namespace {

// Scalars cross the boundary as strings in the field's text form; matrices as
// lists of string lists.  Exact values survive the trip unchanged.
Matrix matrix_from_lists(const FieldPtr& F, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("matrix needs positive dimensions");
    Matrix m(F, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DomainError("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, F->parse(rows[i][j]));
    }
    return m;
}

ScanMode mode_from(const std::string& s) {
    if (s == "lower") return ScanMode::Lower;
    if (s == "upper") return ScanMode::Upper;
    if (s == "all") return ScanMode::All;
    throw DomainError("unknown scan mode '" + s + "'");
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["minors_checked"] = v.minors_checked;
    if (v.witness) {
        d["witness_rows"] = v.witness->rows;
        d["witness_cols"] = v.witness->cols;
    }
    return d;
}

py::dict distance_dict(const DistanceReport& r, const FieldPtr& F) {
    py::dict d;
    d["delta"] = rat_str(r.delta);
    d["k"] = r.k;
    d["l"] = r.l;
    std::vector<std::string> seg;
    for (const auto& s : r.segment) seg.push_back(F->to_string(s));
    d["segment"] = seg;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact linear tree codes and triangular totally nonsingular matrices";

    py::register_exception<Error>(m, "TtcError");

    py::class_<Field, FieldPtr>(m, "Field")
        .def_static("prime", &Field::prime, py::arg("p"))
        .def_static("extension",
                    [](u64 p, const std::vector<u64>& f) { return Field::extension(p, f); },
                    py::arg("p"), py::arg("modulus"))
        .def_static("rationals", &Field::rationals)
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("degree", &Field::degree)
        .def_property_readonly(
            "size", [](const Field& f) -> py::object {
                auto s = f.size();
                return s ? py::cast(*s) : py::none();
            })
        .def("spec", &Field::spec_string)
        .def("arith",
             [](const FieldPtr& f, const std::string& a, const std::string& b,
                const std::string& op) {
                 Scalar x = f->parse(a);
                 if (op == "inv") return f->to_string(f->inv(x));
                 if (op == "neg") return f->to_string(f->neg(x));
                 Scalar y = f->parse(b);
                 if (op == "add") return f->to_string(f->add(x, y));
                 if (op == "sub") return f->to_string(f->sub(x, y));
                 if (op == "mul") return f->to_string(f->mul(x, y));
                 if (op == "div") return f->to_string(f->div(x, y));
                 throw DomainError("unknown op '" + op + "'");
             },
             py::arg("a"), py::arg("b"), py::arg("op"))
        .def("pow",
             [](const FieldPtr& f, const std::string& a, u64 e) {
                 return f->to_string(f->pow(f->parse(a), e));
             })
        .def("__repr__", [](const Field& f) { return "<Field " + f.spec_string() + ">"; });

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_lists), py::arg("field"), py::arg("rows"))
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def_property_readonly("field", &Matrix::field)
        .def("entry",
             [](const Matrix& m, std::size_t i, std::size_t j) {
                 if (i >= m.rows() || j >= m.cols())
                     throw IndexOutOfRange("entry index out of range");
                 return m.field()->to_string(m.at(i, j));
             },
             py::arg("i"), py::arg("j"), "0-based element access")
        .def("to_lists", &Matrix::to_strings)
        .def("submatrix", &Matrix::submatrix, py::arg("rows"), py::arg("cols"),
             "1-based strictly increasing index lists")
        .def("determinant",
             [](const Matrix& m) { return m.field()->to_string(m.determinant()); })
        .def("rank", &Matrix::rank)
        .def("inverse", &Matrix::inverse)
        .def("transpose", &Matrix::transpose)
        .def("lu_factor", &Matrix::lu_factor)
        .def("mod_p", [](const Matrix& m, u64 p) { return m.mod_p(Field::prime(p)); })
        .def("__mul__", &Matrix::operator*)
        .def("__eq__", &Matrix::operator==)
        .def("__repr__", [](const Matrix& m) {
            return "<Matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                   " over " + m.field()->spec_string() + ">";
        });

    m.def("identity",
          [](const FieldPtr& f, std::size_t n) { return Matrix::identity(f, n); });
    m.def("read_matrix", &read_matrix_file, py::arg("path"));
    m.def("write_matrix",
          [](const std::string& path, const Matrix& mat) { write_matrix_file(path, mat); });

    // families
    m.def("cauchy",
          [](const FieldPtr& f, const std::vector<std::string>& a,
             const std::vector<std::string>& b) {
              std::vector<Scalar> av, bv;
              for (const auto& s : a) av.push_back(f->parse(s));
              for (const auto& s : b) bv.push_back(f->parse(s));
              return cauchy(f, av, bv);
          });
    m.def("hilbert", &hilbert);
    m.def("pascal",
          [](std::size_t n, bool lower) {
              return pascal_family(n, lower ? PascalKind::LowerBinomial : PascalKind::Full);
          },
          py::arg("n"), py::arg("lower") = false);
    m.def("vandermonde", [](const FieldPtr& f, std::size_t rows,
                            const std::vector<std::string>& xs) {
        std::vector<Scalar> v;
        for (const auto& s : xs) v.push_back(f->parse(s));
        return vandermonde(f, rows, v);
    });
    m.def("singleton_matrix", [](const FieldPtr& f, const std::string& a, std::size_t n) {
        return singleton_matrix(f, f->parse(a), n);
    });
    m.def("wn_field_instance", &wn_field_instance, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("find_irreducible", [](u64 p, std::size_t d, u64 seed) {
        Poly f = find_irreducible(p, d, seed);
        std::vector<u64> coeffs;
        for (const auto& c : f.coeffs()) coeffs.push_back(std::get<u64>(c));
        return coeffs;
    });
    m.def("hasse_derivative",
          [](const FieldPtr& f, const std::vector<std::string>& coeffs, std::size_t order) {
              std::vector<Scalar> cs;
              for (const auto& s : coeffs) cs.push_back(f->parse(s));
              Poly g = hasse_derivative(Poly(f, cs), order);
              std::vector<std::string> out;
              for (const auto& c : g.coeffs()) out.push_back(f->to_string(c));
              return out;
          });

    // scans
    m.def("nonsingularity_scan",
          [](const Matrix& mat, const std::string& mode, unsigned threads) {
              return verdict_dict(nonsingularity_scan(mat, mode_from(mode), threads));
          },
          py::arg("matrix"), py::arg("mode") = "lower", py::arg("threads") = 1);
    m.def("lu_cryer_check", [](const Matrix& mat) {
        CryerReport r = lu_cryer_check(mat);
        py::dict d;
        d["holds"] = r.holds;
        d["l"] = verdict_dict(r.lower);
        d["u"] = verdict_dict(r.upper);
        return d;
    });
    m.def("lu_band_check", [](const Matrix& mat) { return verdict_dict(lu_band_check(mat)); });
    m.def("counterexample_search", [](u64 seed, u64 bound) {
        CounterexampleResult r = counterexample_search(seed, bound);
        py::dict d;
        d["matrix"] = r.matrix;
        d["lfactor"] = r.lfactor;
        d["l_witness_rows"] = r.l_lower.witness->rows;
        d["l_witness_cols"] = r.l_lower.witness->cols;
        d["candidates_tried"] = r.candidates_tried;
        return d;
    });
    m.def("scan_primes",
          [](const Matrix& mat, u64 pmin, u64 pmax, const std::string& mode, unsigned threads) {
              ScanReport rep = scan_primes(mat, pmin, pmax, mode_from(mode), threads);
              py::list results;
              for (const auto& r : rep.results) {
                  py::dict e = verdict_dict(r.verdict);
                  e["p"] = r.p;
                  results.append(e);
              }
              py::dict d;
              d["results"] = results;
              d["minimal_passing"] =
                  rep.minimal_passing ? py::cast(*rep.minimal_passing) : py::none();
              return d;
          },
          py::arg("matrix"), py::arg("pmin"), py::arg("pmax"), py::arg("mode") = "lower",
          py::arg("threads") = 1);

    // tree codes
    py::class_<TreeCode>(m, "TreeCode")
        .def_property_readonly("n", [](const TreeCode& c) { return c.n; })
        .def_property_readonly("d", [](const TreeCode& c) { return c.d; })
        .def_property_readonly("generator", [](const TreeCode& c) { return c.gen; })
        .def_property_readonly("pcheck",
                               [](const TreeCode& c) -> py::object {
                                   return c.pcheck ? py::cast(*c.pcheck) : py::none();
                               })
        .def("__repr__", [](const TreeCode& c) {
            return "<TreeCode n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + ">";
        });

    m.def("tree_code", [](const Matrix& gen, std::size_t d) {
        return TreeCode::from_generator(gen, d);
    });
    m.def("min_rel_distance",
          [](const TreeCode& code, const std::string& weight, const std::string& method) {
              DistanceReport r = min_rel_distance(
                  code, weight == "sigma" ? WeightMode::Sigma : WeightMode::F,
                  method == "pcheck" ? DistMethod::Pcheck : DistMethod::Bruteforce);
              return distance_dict(r, code.field);
          },
          py::arg("code"), py::arg("weight") = "F", py::arg("method") = "bruteforce");
    m.def("normalize_pcheck", [](const Matrix& mat, std::size_t d) {
        return normalize_pcheck(mat, d).m;
    });
    m.def("generator_from_pcheck", [](const Matrix& mat, std::size_t d) {
        return generator_from_pcheck(NormalFormPcheck::validate(mat, d));
    });
    m.def("pcheck_from_generator",
          [](const TreeCode& code) { return pcheck_from_generator(code).m; });
    m.def("interleave_pcheck", [](const Matrix& t) { return interleave_pcheck(t).m; });
    m.def("extract_triangular", [](const Matrix& mat) {
        ExtractResult r = extract_triangular(NormalFormPcheck::validate(mat, 2));
        py::dict d;
        d["t"] = r.t;
        d["swapped_blocks"] = r.swapped_blocks;
        return d;
    });
    m.def("is_mds",
          [](const Matrix& mat, const std::string& method) {
              MdsVerdict v = is_mds(NormalFormPcheck::validate(mat, 2),
                                    method == "distance" ? MdsMethod::Distance
                                                         : MdsMethod::Columns);
              py::dict d;
              d["mds"] = v.mds;
              d["tuples_checked"] = v.tuples_checked;
              if (v.witness) d["witness"] = *v.witness;
              if (v.delta) d["delta"] = rat_str(*v.delta);
              return d;
          },
          py::arg("pcheck"), py::arg("method") = "columns");
    m.def("mds_generator", &mds_generator);

    // growth
    m.def("entropy_bound",
          [](u64 q, std::size_t d, const std::string& delta) {
              EntropyReport r = entropy_bound(q, d, rat_parse(delta));
              py::dict out;
              out["satisfied"] = r.satisfied;
              out["value"] = r.value;
              out["margin"] = r.margin;
              return out;
          },
          py::arg("q"), py::arg("d"), py::arg("delta"));
    auto grow_result_dict = [](const GrowResult& r) {
        py::dict d;
        d["code"] = r.code;
        d["delta"] = rat_str(r.dist.delta);
        d["attempts"] = r.attempts;
        d["failures"] = r.failures;
        d["entropy_satisfied"] = r.entropy.satisfied;
        return d;
    };
    m.def("grow_random",
          [grow_result_dict](u64 q, std::size_t d, const std::string& delta, std::size_t n,
                             u64 seed, unsigned retries) {
              return grow_result_dict(
                  grow_random(GrowthParams{q, d, rat_parse(delta), n, seed, retries}));
          },
          py::arg("q"), py::arg("d"), py::arg("delta"), py::arg("n"), py::arg("seed"),
          py::arg("retries") = 200);
    m.def("grow_toeplitz",
          [grow_result_dict](u64 q, std::size_t d, const std::string& delta, std::size_t n,
                             u64 seed, unsigned retries) {
              return grow_result_dict(
                  grow_toeplitz(GrowthParams{q, d, rat_parse(delta), n, seed, retries}));
          },
          py::arg("q"), py::arg("d"), py::arg("delta"), py::arg("n"), py::arg("seed"),
          py::arg("retries") = 200);
    m.def("exhaustive_short",
          [grow_result_dict](u64 q, std::size_t d, const std::string& delta,
                             std::size_t len) -> py::object {
              auto r = exhaustive_short(q, d, rat_parse(delta), len);
              if (!r) return py::none();
              return grow_result_dict(*r);
          },
          py::arg("q"), py::arg("d"), py::arg("delta"), py::arg("len"));

    // concatenation
    m.def("find_block_code",
          [](std::size_t k, std::size_t mm, const std::string& eps, u64 seed) {
              return find_block_code(k, mm, rat_parse(eps), seed);
          },
          py::arg("k"), py::arg("m"), py::arg("eps"), py::arg("seed"));
    m.def("concatenate",
          [](const TreeCode& long_code, const TreeCode& short_code, const Matrix& block) {
              ConcatResult r = concatenate(ConcatSpec{long_code, short_code, block});
              py::dict d;
              d["code"] = r.code;
              d["ell"] = r.ell;
              d["d_prime"] = r.code.d;
              d["n_prime"] = r.code.n;
              return d;
          });

    // birkhoff
    m.def("polya_condition", &polya_condition, py::arg("jset"), py::arg("kset"));
    m.def("birkhoff_matrix",
          [](const FieldPtr& f, const std::string& a, const std::string& b,
             const std::vector<std::size_t>& jset, const std::vector<std::size_t>& kset,
             bool hasse) {
              return birkhoff_matrix(f->parse(a), f->parse(b), jset, kset, f,
                                     hasse ? DerivKind::Hasse : DerivKind::Standard);
          },
          py::arg("field"), py::arg("a"), py::arg("b"), py::arg("jset"), py::arg("kset"),
          py::arg("hasse") = true);
    m.def("solve_birkhoff",
          [](const FieldPtr& f, const std::string& a, const std::string& b,
             const std::vector<std::size_t>& jset, const std::vector<std::string>& avals,
             const std::vector<std::size_t>& kset, const std::vector<std::string>& bvals,
             bool hasse) {
              BirkhoffInstance inst{f->parse(a), f->parse(b), jset, kset, {}, {}};
              for (const auto& s : avals) inst.avals.push_back(f->parse(s));
              for (const auto& s : bvals) inst.bvals.push_back(f->parse(s));
              Poly sol =
                  solve_birkhoff(inst, f, hasse ? DerivKind::Hasse : DerivKind::Standard);
              std::vector<std::string> out;
              for (const auto& c : sol.coeffs()) out.push_back(f->to_string(c));
              return out;
          },
          py::arg("field"), py::arg("a"), py::arg("b"), py::arg("jset"), py::arg("avals"),
          py::arg("kset"), py::arg("bvals"), py::arg("hasse") = true);
    m.def("derivative_pcheck",
          [](const FieldPtr& f, const std::string& a, const std::string& b, std::size_t n,
             bool hasse) {
              return derivative_pcheck(f->parse(a), f->parse(b), n, f,
                                       hasse ? DerivKind::Hasse : DerivKind::Standard);
          },
          py::arg("field"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("hasse") = true);
    m.def("polya_mds_equiv",
          [](const FieldPtr& f, const std::string& a, const std::string& b, std::size_t n) {
              PolyaMdsReport r = polya_mds_equiv(f->parse(a), f->parse(b), n, f);
              py::dict d;
              d["agree"] = r.agree;
              d["polya_holds"] = r.polya_holds;
              d["mds"] = r.mds.mds;
              d["structural_ok"] = r.structural_ok;
              d["instances_checked"] = r.instances_checked;
              return d;
          },
          py::arg("field"), py::arg("a"), py::arg("b"), py::arg("n"));
}
