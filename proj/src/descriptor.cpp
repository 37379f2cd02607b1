#include "symsum/descriptor.hpp"

#include <fstream>
#include <sstream>

namespace symsum {

namespace {

struct Line {
    int no;
    std::string key;
    std::vector<std::string> args;
};

std::vector<Line> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DescriptorError(path.string(), 0, "cannot open file");
    std::vector<Line> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream is(raw);
        Line l;
        l.no = no;
        if (!(is >> l.key)) continue;
        std::string tok;
        while (is >> tok) l.args.push_back(tok);
        lines.push_back(std::move(l));
    }
    return lines;
}

i64 to_int(const std::string& file, int no, const std::string& tok) {
    try {
        size_t pos = 0;
        i64 v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw DescriptorError(file, no, "expected an integer, got '" + tok + "'");
    }
}

bool to_bool(const std::string& file, int no, const std::string& tok) {
    if (tok == "true") return true;
    if (tok == "false") return false;
    throw DescriptorError(file, no, "expected true/false, got '" + tok + "'");
}

std::vector<i64> to_vec(const std::string& file, int no, const std::vector<std::string>& args,
                        size_t from, size_t expect) {
    if (args.size() - from != expect)
        throw DescriptorError(file, no,
                              "expected " + std::to_string(expect) + " coefficients, got " +
                                  std::to_string(args.size() - from));
    std::vector<i64> v;
    for (size_t i = from; i < args.size(); ++i) v.push_back(to_int(file, no, args[i]));
    return v;
}

} // namespace

const SurfaceInModel& ParsedManifold::surface(const std::string& name) const {
    for (const auto& s : surfaces)
        if (s.name == name) return s;
    throw std::invalid_argument("no surface named '" + name + "' in model '" + model.name + "'");
}

ParsedManifold parse_manifold_file(const std::filesystem::path& path) {
    const std::string file = path.string();
    auto lines = read_lines(path);

    std::string kind;
    std::string name;
    int n = 0, h = 0, b1 = 0, bplus = 1;
    bool have_n = false, have_h = false;
    std::vector<std::string> labels;
    std::vector<std::vector<i64>> gram;
    std::vector<i64> kvec, wvec;
    bool minimal = false, aspherical = false, full_lattice = true;
    MinimalModelKind mmk = MinimalModelKind::neither;
    std::optional<Chern> chern;
    std::vector<std::vector<i64>> exceptional;
    struct RawSurface {
        int no;
        std::string name;
        int genus;
        std::vector<i64> coeffs;
    };
    std::vector<RawSurface> raw_surfaces;

    int kind_line = 0;
    for (const auto& l : lines) {
        if (l.key == "kind") {
            if (l.args.size() != 1) throw DescriptorError(file, l.no, "kind takes one value");
            kind = l.args[0];
            kind_line = l.no;
        } else if (l.key == "name") {
            if (l.args.size() != 1) throw DescriptorError(file, l.no, "name takes one value");
            name = l.args[0];
        } else if (l.key == "n") {
            n = static_cast<int>(to_int(file, l.no, l.args.at(0)));
            have_n = true;
        } else if (l.key == "h") {
            h = static_cast<int>(to_int(file, l.no, l.args.at(0)));
            have_h = true;
        } else if (l.key == "b1") {
            b1 = static_cast<int>(to_int(file, l.no, l.args.at(0)));
        } else if (l.key == "bplus") {
            bplus = static_cast<int>(to_int(file, l.no, l.args.at(0)));
        } else if (l.key == "labels") {
            labels = l.args;
        } else if (l.key == "gram") {
            gram.clear();
            std::vector<i64> row;
            for (const auto& tok : l.args) {
                if (tok == ";") {
                    gram.push_back(row);
                    row.clear();
                } else {
                    row.push_back(to_int(file, l.no, tok));
                }
            }
            if (!row.empty()) gram.push_back(row);
        } else if (l.key == "K") {
            kvec = to_vec(file, l.no, l.args, 0, l.args.size());
        } else if (l.key == "omega") {
            wvec = to_vec(file, l.no, l.args, 0, l.args.size());
        } else if (l.key == "minimal") {
            minimal = to_bool(file, l.no, l.args.at(0));
        } else if (l.key == "aspherical") {
            aspherical = to_bool(file, l.no, l.args.at(0));
        } else if (l.key == "full_lattice") {
            full_lattice = to_bool(file, l.no, l.args.at(0));
        } else if (l.key == "minimal_model") {
            const std::string& v = l.args.at(0);
            if (v == "rational") mmk = MinimalModelKind::rational;
            else if (v == "ruled") mmk = MinimalModelKind::ruled;
            else if (v == "neither") mmk = MinimalModelKind::neither;
            else throw DescriptorError(file, l.no, "minimal_model must be rational|ruled|neither");
        } else if (l.key == "chern") {
            if (l.args.size() != 2) throw DescriptorError(file, l.no, "chern takes two integers");
            chern = Chern{to_int(file, l.no, l.args[0]), to_int(file, l.no, l.args[1])};
        } else if (l.key == "exceptional") {
            exceptional.push_back(to_vec(file, l.no, l.args, 0, l.args.size()));
        } else if (l.key == "surface") {
            if (l.args.size() < 3)
                throw DescriptorError(file, l.no, "surface takes NAME GENUS coefficients...");
            RawSurface s;
            s.no = l.no;
            s.name = l.args[0];
            s.genus = static_cast<int>(to_int(file, l.no, l.args[1]));
            for (size_t i = 2; i < l.args.size(); ++i) s.coeffs.push_back(to_int(file, l.no, l.args[i]));
            raw_surfaces.push_back(std::move(s));
        } else {
            throw DescriptorError(file, l.no, "unknown key '" + l.key + "'");
        }
    }

    if (kind.empty()) throw DescriptorError(file, 0, "missing 'kind'");

    ParsedManifold out;
    try {
        if (kind == "rational") {
            if (!have_n) throw DescriptorError(file, kind_line, "rational needs 'n'");
            out.model = ManifoldModel::rational(n);
        } else if (kind == "ruled_trivial") {
            if (!have_h) throw DescriptorError(file, kind_line, "ruled_trivial needs 'h'");
            out.model = ManifoldModel::ruled_trivial(h, have_n ? n : 0);
        } else if (kind == "ruled_twisted") {
            if (!have_h) throw DescriptorError(file, kind_line, "ruled_twisted needs 'h'");
            out.model = ManifoldModel::ruled_twisted(h, have_n ? n : 0);
        } else if (kind == "s2xs2") {
            out.model = ManifoldModel::s2xs2(have_n ? n : 0);
        } else if (kind == "general") {
            if (gram.empty()) throw DescriptorError(file, kind_line, "general needs 'gram'");
            if (labels.empty()) throw DescriptorError(file, kind_line, "general needs 'labels'");
            auto lat = IntersectionLattice::create(name.empty() ? "general" : name, gram, labels);
            if (kvec.empty()) throw DescriptorError(file, kind_line, "general needs 'K'");
            if (wvec.empty()) throw DescriptorError(file, kind_line, "general needs 'omega'");
            ModelFlags flags{minimal, mmk, bplus, aspherical};
            out.model = ManifoldModel::general(name.empty() ? "general" : name, lat,
                                               HomologyClass(lat, kvec), b1,
                                               HomologyClass(lat, wvec), flags);
            out.model.lattice_is_full_h2 = full_lattice;
            out.model.asserted_chern = chern;
            if (!exceptional.empty()) {
                std::vector<HomologyClass> exc;
                for (auto& e : exceptional) exc.emplace_back(lat, e);
                out.model.known_exceptionals = std::move(exc);
            }
        } else {
            throw DescriptorError(file, kind_line, "unknown kind '" + kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(file, kind_line, e.what());
    }

    if (kind != "general") {
        if (!labels.empty() && labels != out.model.lattice->labels)
            throw DescriptorError(file, 0,
                                  "labels must match the canonical basis of kind '" + kind +
                                      "' exactly (no reordering)");
        if (!name.empty()) out.model.name = name;
    }

    for (const auto& rs : raw_surfaces) {
        if (static_cast<int>(rs.coeffs.size()) != out.model.lattice->rank)
            throw DescriptorError(file, rs.no,
                                  "surface '" + rs.name + "': expected " +
                                      std::to_string(out.model.lattice->rank) +
                                      " coefficients, got " + std::to_string(rs.coeffs.size()));
        try {
            out.surfaces.push_back(make_surface(out.model,
                                                HomologyClass(out.model.lattice, rs.coeffs),
                                                rs.genus, true, rs.name));
        } catch (const std::invalid_argument& e) {
            throw DescriptorError(file, rs.no, e.what());
        }
    }
    return out;
}

ParsedSum parse_sum_file(const std::filesystem::path& path) {
    const std::string file = path.string();
    auto lines = read_lines(path);
    std::filesystem::path dir = path.parent_path();

    bool have1 = false, have2 = false;
    ParsedSum out;
    for (const auto& l : lines) {
        if (l.key == "side1" || l.key == "side2") {
            if (l.args.size() != 2)
                throw DescriptorError(file, l.no, l.key + " takes MANIFOLD_FILE SURFACE_NAME");
            std::filesystem::path mf = dir / l.args[0];
            ParsedManifold pm = parse_manifold_file(mf);
            try {
                SurfaceInModel s = pm.surface(l.args[1]);
                if (l.key == "side1") {
                    out.file1 = mf;
                    out.surface1 = l.args[1];
                    out.sum.side1 = {std::move(pm.model), std::move(s)};
                    have1 = true;
                } else {
                    out.file2 = mf;
                    out.surface2 = l.args[1];
                    out.sum.side2 = {std::move(pm.model), std::move(s)};
                    have2 = true;
                }
            } catch (const std::invalid_argument& e) {
                throw DescriptorError(file, l.no, e.what());
            }
        } else {
            throw DescriptorError(file, l.no, "unknown key '" + l.key + "' (expected side1/side2)");
        }
    }
    if (!have1 || !have2) throw DescriptorError(file, 0, "a sum descriptor needs side1 and side2");
    out.sum.genus = out.sum.side1.surface.genus;
    return out;
}

} // namespace symsum
