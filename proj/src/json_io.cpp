#include "grasstensor/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace grasstensor {

Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("rational entries must be integers or strings, got: " + v.dump());
}

Json rational_to_json(const Rational& v) { return to_string(v); }

ProjectionSetup setup_from_json(const Json& j) {
    ProjectionSetup setup;
    try {
        setup.k = j.at("k").get<int>();
        const auto& views = j.at("views");
        if (!views.is_array() || views.size() != 3) throw ParseError("expected exactly 3 views");
        for (int v = 0; v < 3; ++v) {
            const auto& view = views.at(v);
            setup.h[v] = view.at("h").get<int>();
            const auto& p = view.at("P");
            if (!p.is_array() || p.empty()) throw ParseError("view P must be a non-empty array");
            RationalMatrix m(static_cast<int>(p.size()), static_cast<int>(p.at(0).size()));
            for (int r = 0; r < m.rows(); ++r) {
                const auto& row = p.at(r);
                if (static_cast<int>(row.size()) != m.cols()) throw ParseError("ragged P matrix");
                for (int c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(row.at(c));
            }
            setup.P[v] = std::move(m);
        }
        const auto& profile = j.at("profile");
        if (!profile.is_array() || profile.size() != 3)
            throw ParseError("profile must have 3 entries");
        for (int v = 0; v < 3; ++v) setup.profile.alpha[v] = profile.at(v).get<int>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad setup file: ") + e.what());
    }
    return setup;
}

Json setup_to_json(const ProjectionSetup& setup) {
    Json views = Json::array();
    for (int v = 0; v < 3; ++v) {
        Json p = Json::array();
        for (int r = 0; r < setup.P[v].rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < setup.P[v].cols(); ++c)
                row.push_back(rational_to_json(setup.P[v](r, c)));
            p.push_back(std::move(row));
        }
        views.push_back(Json{{"h", setup.h[v]}, {"P", std::move(p)}});
    }
    return Json{{"k", setup.k},
                {"views", std::move(views)},
                {"profile", {setup.profile.alpha[0], setup.profile.alpha[1], setup.profile.alpha[2]}}};
}

Tensor3<Rational> rational_tensor_from_json(const Json& j) {
    try {
        const auto& dims = j.at("dims");
        if (!dims.is_array() || dims.size() != 3) throw ParseError("tensor dims must have 3 entries");
        Tensor3<Rational> t(dims.at(0).get<int>(), dims.at(1).get<int>(), dims.at(2).get<int>());
        const auto& entries = j.at("entries");
        if (entries.size() != t.size()) throw ParseError("tensor entry count mismatch");
        for (std::size_t e = 0; e < t.size(); ++e) t.data()[e] = rational_from_json(entries.at(e));
        return t;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad tensor file: ") + e.what());
    }
}

Json tensor_to_json(const Tensor3<Rational>& t) {
    Json entries = Json::array();
    for (const auto& v : t.data()) entries.push_back(rational_to_json(v));
    return Json{{"dims", {t.dims()[0], t.dims()[1], t.dims()[2]}}, {"entries", std::move(entries)}};
}

Json tensor_to_json(const Tensor3<Complex>& t) {
    Json entries = Json::array();
    for (const auto& v : t.data()) {
        if (v.imag() == 0.0) {
            entries.push_back(v.real());
        } else {
            entries.push_back(Json::array({v.real(), v.imag()}));
        }
    }
    return Json{{"dims", {t.dims()[0], t.dims()[1], t.dims()[2]}}, {"entries", std::move(entries)}};
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_to_json(const Matrix<Complex>& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) {
            const Complex& v = m(r, c);
            if (v.imag() == 0.0) {
                row.push_back(v.real());
            } else {
                row.push_back(Json::array({v.real(), v.imag()}));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array");
    RationalMatrix m(static_cast<int>(j.size()), static_cast<int>(j.at(0).size()));
    for (int r = 0; r < m.rows(); ++r) {
        const auto& row = j.at(r);
        if (static_cast<int>(row.size()) != m.cols()) throw ParseError("ragged matrix");
        for (int c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(row.at(c));
    }
    return m;
}

std::string setup_hash(const ProjectionSetup& setup) {
    const std::string canonical = setup_to_json(setup).dump();
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace grasstensor
