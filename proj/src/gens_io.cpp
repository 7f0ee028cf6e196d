#include "saxlkit/gens_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace saxl {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Perm parse_perm_line(const std::string& line, int degree) {
    std::string s = strip(line);
    if (s.empty()) throw std::invalid_argument("empty permutation line");
    if (s[0] == '(') {
        // cycle notation
        std::vector<Point> img(static_cast<size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        size_t i = 0;
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
                ++i;
                continue;
            }
            if (s[i] != '(') throw std::invalid_argument("bad cycle notation: expected '('");
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("bad cycle notation: missing ')'");
            std::string body = s.substr(i + 1, close - i - 1);
            for (char& ch : body)
                if (ch == ',') ch = ' ';
            std::istringstream cs(body);
            std::vector<Point> cyc;
            Point v;
            while (cs >> v) {
                if (v < 0 || v >= degree) throw std::invalid_argument("cycle point out of range");
                cyc.push_back(v);
            }
            for (size_t k = 0; k + 1 < cyc.size(); ++k) img[static_cast<size_t>(cyc[k])] = cyc[k + 1];
            if (cyc.size() > 1) img[static_cast<size_t>(cyc.back())] = cyc.front();
            i = close + 1;
        }
        return Perm::from_images(std::move(img));
    }
    std::istringstream is(s);
    std::vector<Point> img;
    Point v;
    while (is >> v) img.push_back(v);
    if (static_cast<int>(img.size()) != degree)
        throw std::invalid_argument("permutation line has wrong number of images");
    return Perm::from_images(std::move(img));
}

GensFile parse_gens(std::istream& in) {
    GensFile out;
    std::string line;
    bool have_degree = false;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (!have_degree) {
            out.degree = std::stoi(s);
            if (out.degree <= 0) throw std::invalid_argument("degree must be positive");
            have_degree = true;
            continue;
        }
        out.gens.push_back(parse_perm_line(s, out.degree));
    }
    if (!have_degree) throw std::invalid_argument("gens file missing degree line");
    return out;
}

GensFile load_gens_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gens file: " + path);
    try {
        return parse_gens(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_gens_file(const std::string& path, int degree, const std::vector<Perm>& gens,
                     const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write gens file: " + path);
    if (!comment.empty()) out << "# " << comment << "\n";
    out << degree << "\n";
    for (const Perm& g : gens) {
        const auto& img = g.images();
        for (size_t i = 0; i < img.size(); ++i) {
            if (i) out << ' ';
            out << img[i];
        }
        out << "\n";
    }
}

std::vector<std::vector<std::vector<int>>> load_matrix_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::vector<int> entries;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream is(s);
        int v;
        while (is >> v) entries.push_back(v);
    }
    const size_t per = static_cast<size_t>(n) * static_cast<size_t>(n);
    if (entries.empty() || entries.size() % per != 0)
        throw std::runtime_error(path + ": entry count not a multiple of n*n");
    std::vector<std::vector<std::vector<int>>> mats;
    for (size_t off = 0; off < entries.size(); off += per) {
        std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    entries[off + static_cast<size_t>(r * n + c)];
        mats.push_back(std::move(m));
    }
    return mats;
}

}  // namespace saxl
