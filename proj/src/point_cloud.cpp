#include "btda/point_cloud.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace btda {

void point_cloud::add(std::span<const double> p) {
    if (static_cast<int>(p.size()) != dim)
        throw std::invalid_argument("point_cloud::add: wrong coordinate count");
    coords.insert(coords.end(), p.begin(), p.end());
}

void point_cloud::add(double x, double y) {
    const double p[2] = {x, y};
    add(std::span<const double>{p, 2});
}

void point_cloud::add(double x, double y, double z) {
    const double p[3] = {x, y, z};
    add(std::span<const double>{p, 3});
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

void write_point_cloud(const point_cloud& cloud, std::ostream& os) {
    os << "# dim=" << cloud.dim << " source=" << (cloud.source.empty() ? "unknown" : cloud.source)
       << " seed=";
    if (cloud.seed)
        os << *cloud.seed;
    else
        os << "none";
    os << "\n";
    char buf[32];
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (int d = 0; d < cloud.dim; ++d) {
            std::snprintf(buf, sizeof(buf), "%.17g", p[d]);
            if (d) os << ',';
            os << buf;
        }
        os << "\n";
    }
}

void write_point_cloud(const point_cloud& cloud, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    write_point_cloud(cloud, os);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

point_cloud read_point_cloud(std::istream& is) {
    point_cloud cloud;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                if (key == "dim")
                    cloud.dim = std::stoi(val);
                else if (key == "source")
                    cloud.source = val;
                else if (key == "seed" && val != "none")
                    cloud.seed = std::stoull(val);
            }
            have_header = true;
            continue;
        }
        std::vector<double> p;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) p.push_back(std::stod(field));
        if (!have_header && cloud.dim == 0) cloud.dim = static_cast<int>(p.size());
        if (static_cast<int>(p.size()) != cloud.dim)
            throw std::runtime_error("point_cloud: inconsistent coordinate count in line: " + line);
        cloud.add(std::span<const double>{p.data(), p.size()});
    }
    return cloud;
}

point_cloud read_point_cloud(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
    return read_point_cloud(is);
}

} // namespace btda
