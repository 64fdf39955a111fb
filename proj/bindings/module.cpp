#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hankel/conjecture.hpp"
#include "hankel/favard.hpp"
#include "hankel/linalg.hpp"
#include "hankel/lucas.hpp"
#include "hankel/proof_engine.hpp"
#include "hankel/verify.hpp"

namespace py = pybind11;

namespace {

using namespace hankel;

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int int_from_py(const py::handle& obj) {
    return Int(py::str(obj).cast<std::string>());
}

py::object rat_to_py(const Rat& v) {
    if (v.get_den() == 1) return to_py(v.get_num());
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(v.get_num()), to_py(v.get_den()));
}

SequenceSpec spec_from_name(const std::string& family, unsigned long r) {
    if (family == "binomial_shift") return SequenceSpec::binomial_shift(r);
    if (family == "d_prime") return SequenceSpec::d_prime(r);
    if (family == "aerated_catalan") return SequenceSpec::aerated_catalan();
    if (family == "aerated_central_binomial")
        return SequenceSpec::aerated_central_binomial();
    throw std::invalid_argument("unknown sequence family: " + family);
}

py::dict report_to_dict(const VerificationReport& rep) {
    py::dict out;
    out["claim"] = rep.claim;
    out["passes"] = rep.passes;
    out["failures"] = rep.failures;
    out["skips"] = rep.skips;
    out["ok"] = rep.ok();
    if (rep.first_counterexample) {
        const Record& c = *rep.first_counterexample;
        py::dict ce;
        if (c.r) ce["r"] = *c.r;
        if (c.k) ce["k"] = *c.k;
        if (c.n) ce["n"] = *c.n;
        if (c.N) ce["N"] = *c.N;
        ce["lhs"] = c.lhs;
        ce["rhs"] = c.rhs;
        out["first_counterexample"] = ce;
    }
    return out;
}

std::optional<Range> range_from_py(const py::object& obj) {
    if (obj.is_none()) return std::nullopt;
    auto pair = obj.cast<std::pair<long, long>>();
    return Range{pair.first, pair.second};
}

}  // namespace

PYBIND11_MODULE(hankel_lab, m) {
    m.doc() =
        "exact Hankel determinants of shifted central binomial sequences";

    m.def(
        "d_r",
        [](unsigned long r, std::size_t n) { return to_py(d_r_direct(r, n)); },
        py::arg("r"), py::arg("n"),
        "Hankel determinant of C(2m+r, m), n x n");
    m.def(
        "d_prime",
        [](unsigned long r, std::size_t n) { return to_py(d_prime(r, n)); },
        py::arg("r"), py::arg("n"),
        "Hankel determinant of the weighted family, r >= 1");
    m.def(
        "closed_form",
        [](unsigned long r, std::size_t n) -> py::object {
            auto v = closed_form(r, n);
            return v ? py::object(to_py(*v)) : py::none();
        },
        py::arg("r"), py::arg("n"),
        "closed-form value or None outside the covered residues");
    m.def(
        "seq_term",
        [](const std::string& family, unsigned long r, unsigned long n) {
            return to_py(seq_term(spec_from_name(family, r), n));
        },
        py::arg("family"), py::arg("r"), py::arg("n"));
    m.def(
        "hankel",
        [](const std::string& family, unsigned long r, std::size_t n) {
            ExactMatrix h = hankel_matrix(spec_from_name(family, r), n);
            py::list rows;
            for (std::size_t i = 0; i < h.rows(); ++i) {
                py::list row;
                for (std::size_t j = 0; j < h.cols(); ++j)
                    row.append(rat_to_py(h.at(i, j)));
                rows.append(row);
            }
            return rows;
        },
        py::arg("family"), py::arg("r"), py::arg("n"));
    m.def(
        "det",
        [](const std::vector<std::vector<py::object>>& rows) {
            std::size_t n = rows.size();
            std::vector<std::vector<Rat>> grid(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (rows[i].size() != n)
                    throw std::invalid_argument("det: matrix must be square");
                for (const py::object& x : rows[i])
                    grid[i].push_back(Rat(int_from_py(x)));
            }
            return rat_to_py(det_bareiss(ExactMatrix::from_rows(grid)));
        },
        py::arg("rows"), "exact determinant of an integer matrix");
    m.def(
        "witness",
        [](int case_id, unsigned long k, unsigned long n) {
            py::list out;
            for (const Rat& x : witness_vector(case_id, k, n))
                out.append(rat_to_py(x));
            return out;
        },
        py::arg("case_id"), py::arg("k"), py::arg("n"));
    m.def(
        "lucas",
        [](unsigned long n) {
            IntPolynomial p = lucas_poly(n);
            py::list out;
            for (const Int& c : p.coeffs()) out.append(to_py(c));
            return out;
        },
        py::arg("n"), "ascending coefficients of the n-th Lucas polynomial");
    m.def("claims", [] { return claim_names(); });
    m.def(
        "verify_claim",
        [](const std::string& name, bool quick, unsigned threads,
           const py::object& r, const py::object& k, const py::object& n,
           const py::object& N) {
            ClaimRanges cfg;
            cfg.quick = quick;
            cfg.threads = threads;
            cfg.r = range_from_py(r);
            cfg.k = range_from_py(k);
            cfg.n = range_from_py(n);
            cfg.N = range_from_py(N);
            return report_to_dict(run_claim(name, cfg));
        },
        py::arg("name"), py::arg("quick") = false, py::arg("threads") = 0,
        py::arg("r") = py::none(), py::arg("k") = py::none(),
        py::arg("n") = py::none(), py::arg("N") = py::none());
    m.def(
        "conjectures",
        [](unsigned long k_max, unsigned long n_max) {
            py::list out;
            for (const auto& res : check_dprime_conjectures(k_max, n_max)) {
                py::dict d;
                d["id"] = res.id;
                d["name"] = res.name;
                d["statement"] = res.statement;
                d["supported"] = res.supported;
                d["instances"] = res.report.records.size();
                out.append(d);
            }
            return out;
        },
        py::arg("k_max") = 2, py::arg("n_max") = 3);
    m.def(
        "matrix_identity",
        [](unsigned long k_max, std::size_t window) {
            ConjectureResult res = check_matrix_identity(k_max, window);
            py::dict d;
            d["id"] = res.id;
            d["name"] = res.name;
            d["statement"] = res.statement;
            d["supported"] = res.supported;
            d["instances"] = res.report.records.size();
            return d;
        },
        py::arg("k_max") = 2, py::arg("window") = 12);
}
