#include "gt/spacefile.hpp"

#include <sstream>

#include "gt/errors.hpp"

namespace gt {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

struct BlockParser {
    const std::vector<Line>& lines;
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    const Line& peek() const { return lines[pos]; }
    const Line& take() { return lines[pos++]; }
};

NamedSpace parse_space_block(BlockParser& p) {
    if (p.done()) throw ParseError(0, "expected 'space <name>'");
    const Line& head = p.take();
    if (head.tokens[0] != "space" || head.tokens.size() != 2)
        throw ParseError(head.number, "expected 'space <name>'");
    const std::string name = head.tokens[1];

    if (p.done()) throw ParseError(head.number, "expected 'points ...' after space header");
    const Line& pts = p.take();
    if (pts.tokens[0] != "points" || pts.tokens.size() < 2)
        throw ParseError(pts.number, "expected 'points <p1> <p2> ...'");
    std::vector<std::string> points(pts.tokens.begin() + 1, pts.tokens.end());

    std::vector<std::vector<std::string>> opens;
    int lastLine = pts.number;
    while (!p.done() && p.peek().tokens[0] == "open") {
        const Line& line = p.take();
        opens.emplace_back(line.tokens.begin() + 1, line.tokens.end());
        lastLine = line.number;
    }

    try {
        return NamedSpace{name, Space::make(points, opens)};
    } catch (const Error& e) {
        throw ParseError(lastLine, e.what());
    }
}

}  // namespace

NamedSpace parse_space(const std::string& text) {
    const auto lines = tokenize(text);
    BlockParser p{lines};
    NamedSpace ns = parse_space_block(p);
    if (!p.done())
        throw ParseError(p.peek().number, "unexpected directive '" + p.peek().tokens[0] + "'");
    return ns;
}

std::string render_space(const std::string& name, const Space& s) {
    std::ostringstream out;
    out << "space " << name << "\n";
    out << "points";
    for (const auto& l : s.ground().labels()) out << " " << l;
    out << "\n";
    for (const Subset v : s.gamma()) {
        out << "open";
        for (const auto& n : s.ground().names(v)) out << " " << n;
        out << "\n";
    }
    return out.str();
}

std::string render_witness(const Witness& w) {
    std::ostringstream out;
    out << "witness " << w.property << "\n";
    out << render_space("w", w.space);
    for (const auto& [role, set] : w.sets) {
        out << "subset " << role;
        for (const auto& n : w.space.ground().names(set)) out << " " << n;
        out << "\n";
    }
    if (!w.note.empty()) out << "note " << w.note << "\n";
    return out.str();
}

std::vector<Witness> parse_witnesses(const std::string& text) {
    const auto lines = tokenize(text);
    BlockParser p{lines};
    std::vector<Witness> out;
    while (!p.done()) {
        const Line& head = p.take();
        if (head.tokens[0] != "witness" || head.tokens.size() != 2)
            throw ParseError(head.number, "expected 'witness <property>'");
        Witness w;
        w.property = head.tokens[1];
        w.space = parse_space_block(p).space;
        while (!p.done() && p.peek().tokens[0] == "subset") {
            const Line& line = p.take();
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "expected 'subset <role> [points...]'");
            std::vector<std::string> names(line.tokens.begin() + 2, line.tokens.end());
            try {
                w.sets.emplace_back(line.tokens[1], w.space.ground().subset_of_names(names));
            } catch (const Error& e) {
                throw ParseError(line.number, e.what());
            }
        }
        if (!p.done() && p.peek().tokens[0] == "note") {
            const Line& line = p.take();
            std::string note;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                if (i > 1) note += " ";
                note += line.tokens[i];
            }
            w.note = note;
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace gt
