#include "fga/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fga::io {

namespace {

std::vector<std::int64_t> int_list(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw SchemaError(std::string("missing or non-array field \"") + key + "\"");
    }
    std::vector<std::int64_t> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer()) {
            throw SchemaError(std::string("field \"") + key + "\" must contain integers");
        }
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

std::vector<double> real_list(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw SchemaError(std::string("missing or non-array field \"") + key + "\"");
    }
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) {
            throw SchemaError(std::string("field \"") + key + "\" must contain numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

GroupSpec group_field(const json& j) {
    try {
        return make_group(int_list(j, "group"));
    } catch (const InvalidGroupError& e) {
        throw SchemaError(e.what());
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::int64_t> split_ints(const std::string& text, char sep) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) {
            throw SchemaError("empty entry in integer list \"" + text + "\"");
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw SchemaError("cannot parse integer \"" + item + "\"");
        }
    }
    return out;
}

}  // namespace

json signal_to_json(const Signal& signal) {
    json j;
    j["group"] = signal.group.orders;
    json re = json::array();
    json im = json::array();
    for (const cplx& v : signal.values) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

Signal signal_from_json(const json& j) {
    const GroupSpec group = group_field(j);
    const auto re = real_list(j, "re");
    const auto im = real_list(j, "im");
    if (static_cast<std::int64_t>(re.size()) != group.order || re.size() != im.size()) {
        throw SchemaError("signal arrays must have length |G|");
    }
    std::vector<cplx> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) values[i] = cplx(re[i], im[i]);
    return make_signal(group, std::move(values));
}

json lattice_to_json(const Lattice& lattice) {
    json j;
    j["group"] = lattice.group.orders;
    json gens = json::array();
    for (const TFPoint& p : lattice.generators) {
        json point = json::array();
        for (std::int64_t c : p.time.coords) point.push_back(c);
        for (std::int64_t c : p.freq.coords) point.push_back(c);
        gens.push_back(std::move(point));
    }
    j["generators"] = std::move(gens);
    return j;
}

Lattice lattice_from_json(const json& j) {
    const GroupSpec group = group_field(j);
    if (!j.contains("generators") || !j["generators"].is_array()) {
        throw SchemaError("missing or non-array field \"generators\"");
    }
    const std::size_t k = group.orders.size();
    std::vector<TFPoint> gens;
    for (const auto& point : j["generators"]) {
        if (!point.is_array() || point.size() != 2 * k) {
            throw SchemaError("each generator needs " + std::to_string(2 * k) +
                              " coordinates");
        }
        std::vector<std::int64_t> time_coords, freq_coords;
        for (std::size_t i = 0; i < k; ++i) time_coords.push_back(point[i].get<std::int64_t>());
        for (std::size_t i = k; i < 2 * k; ++i) {
            freq_coords.push_back(point[i].get<std::int64_t>());
        }
        gens.push_back(TFPoint{make_element(group, std::move(time_coords)),
                               make_element(group, std::move(freq_coords))});
    }
    return enumerate_subgroup(group, gens);
}

json matrix_to_json(const GroupSpec& group, const OperatorMatrix& m) {
    json j;
    j["group"] = group.orders;
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json rrow = json::array();
        json irow = json::array();
        for (int c = 0; c < m.cols; ++c) {
            rrow.push_back(m.at(i, c).real());
            irow.push_back(m.at(i, c).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

std::pair<GroupSpec, OperatorMatrix> matrix_from_json(const json& j) {
    const GroupSpec group = group_field(j);
    if (!j.contains("re") || !j.contains("im") || !j["re"].is_array() || !j["im"].is_array()) {
        throw SchemaError("matrix JSON needs 2D \"re\" and \"im\" arrays");
    }
    const std::int64_t n = group.order;
    if (static_cast<std::int64_t>(j["re"].size()) != n ||
        static_cast<std::int64_t>(j["im"].size()) != n) {
        throw SchemaError("matrix must be |G| x |G|");
    }
    OperatorMatrix m(static_cast<int>(n), static_cast<int>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& rrow = j["re"][static_cast<std::size_t>(i)];
        const auto& irow = j["im"][static_cast<std::size_t>(i)];
        if (!rrow.is_array() || !irow.is_array() ||
            static_cast<std::int64_t>(rrow.size()) != n ||
            static_cast<std::int64_t>(irow.size()) != n) {
            throw SchemaError("matrix must be |G| x |G|");
        }
        for (std::int64_t c = 0; c < n; ++c) {
            m.at(static_cast<int>(i), static_cast<int>(c)) =
                cplx(rrow[static_cast<std::size_t>(c)].get<double>(),
                     irow[static_cast<std::size_t>(c)].get<double>());
        }
    }
    return {group, std::move(m)};
}

std::string spreading_to_csv(const SpreadingFunction& eta, double frobenius_sq) {
    std::string out = "k_index,r_index,re,im,abs\n";
    double sum_abs2 = 0.0;
    for (std::int64_t idx = 0; idx < plane_size(eta.group); ++idx) {
        const TFPoint p = tf_point_at(eta.group, idx);
        const cplx v = eta.values[static_cast<std::size_t>(idx)];
        sum_abs2 += std::norm(v);
        out += std::to_string(index_of(p.time)) + "," + std::to_string(index_of(p.freq)) +
               "," + format_double(v.real()) + "," + format_double(v.imag()) + "," +
               format_double(std::abs(v)) + "\n";
    }
    out += "# parseval sum_abs2=" + format_double(sum_abs2) +
           " frobenius_sq_over_order=" +
           format_double(frobenius_sq / static_cast<double>(eta.group.order)) + "\n";
    return out;
}

std::vector<TFPoint> parse_generators(const GroupSpec& group, const std::string& text) {
    std::vector<TFPoint> gens;
    if (text.empty()) return gens;
    std::stringstream ss(text);
    std::string point;
    const std::size_t k = group.orders.size();
    while (std::getline(ss, point, ';')) {
        if (point.empty()) continue;
        const auto coords = split_ints(point, ',');
        if (coords.size() != 2 * k) {
            throw SchemaError("generator \"" + point + "\" needs " + std::to_string(2 * k) +
                              " coordinates (time then frequency)");
        }
        std::vector<std::int64_t> time_coords(coords.begin(),
                                              coords.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<std::int64_t> freq_coords(coords.begin() + static_cast<std::ptrdiff_t>(k),
                                              coords.end());
        gens.push_back(TFPoint{make_element(group, std::move(time_coords)),
                               make_element(group, std::move(freq_coords))});
    }
    return gens;
}

GroupSpec parse_group(const std::string& text) {
    return make_group(split_ints(text, ','));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open \"" + path + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write \"" + path + "\"");
    out << contents;
}

}  // namespace fga::io
