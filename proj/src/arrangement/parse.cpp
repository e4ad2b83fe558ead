#include <cctype>
#include <charconv>
#include <sstream>

#include "divlink/arrangement.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    int line;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("syntax", line, what + " in '" + std::string(s) + "'");
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
    }
    std::int64_t integer() {
        skip_ws();
        std::int64_t v = 0;
        const char* b = s.data() + i;
        const char* e = s.data() + s.size();
        if (b != e && *b == '+') ++b;
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p == b) fail("expected integer");
        i = static_cast<std::size_t>(p - s.data());
        return v;
    }
    std::string_view word() {
        skip_ws();
        std::size_t b = i;
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(b, i - b);
    }
};

void check_range(std::int64_t v, int line) {
    if (v > kMaxCoordinate || v < -kMaxCoordinate)
        throw ParseError("coordinate-range", line, "coordinate " + std::to_string(v) + " out of range");
}

void validate_strand(const StrandSet& s, const Strand& st, int line) {
    std::int64_t n = s.boundary_half_width;
    for (const auto& p : st.points)
        if (p.x < -n || p.x > n || p.y < -n || p.y > n)
            throw ParseError("outside-disk", line, "point " + to_string(p) + " lies outside the disk");
    if (st.kind == StrandKind::Open) {
        if (st.points.size() < 2) throw ParseError("syntax", line, "open strand needs at least two points");
        if (!s.on_boundary(st.points.front()) || !s.on_boundary(st.points.back()))
            throw ParseError("endpoint-off-boundary", line, "open strand must start and end on the boundary");
        for (std::size_t k = 1; k + 1 < st.points.size(); ++k)
            if (s.on_boundary(st.points[k]))
                throw ParseError("interior-point-on-boundary", line,
                                 "point " + to_string(st.points[k]) + " touches the boundary");
    } else {
        if (st.points.size() < 3) throw ParseError("syntax", line, "closed strand needs at least three points");
        for (const auto& p : st.points)
            if (s.on_boundary(p))
                throw ParseError("closed-touches-boundary", line, "closed strand touches the boundary at " + to_string(p));
        for (std::size_t a = 0; a < st.points.size(); ++a)
            for (std::size_t b = a + 1; b < st.points.size(); ++b)
                if (st.points[a] == st.points[b])
                    throw ParseError("repeated-point", line, "closed strand repeats " + to_string(st.points[a]));
    }
    for (std::size_t j = 0; j < st.segment_count(); ++j)
        if (st.seg_start(j) == st.seg_end(j))
            throw ParseError("zero-length", line, "zero-length segment at " + to_string(st.seg_start(j)));
}

} // namespace

StrandSet parse_divide(std::string_view text) {
    StrandSet out;
    bool have_boundary = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        Cursor c{line, 0, line_no};
        if (c.done()) continue;
        std::string_view kw = c.word();
        if (kw == "boundary") {
            if (have_boundary) c.fail("duplicate boundary line");
            out.boundary_half_width = c.integer();
            if (out.boundary_half_width <= 0) throw ParseError("syntax", line_no, "boundary must be positive");
            check_range(out.boundary_half_width, line_no);
            if (!c.done()) c.fail("trailing characters");
            have_boundary = true;
        } else if (kw == "open" || kw == "closed") {
            if (!have_boundary) c.fail("strand before boundary line");
            Strand st;
            st.kind = kw == "open" ? StrandKind::Open : StrandKind::Closed;
            while (!c.done()) {
                c.expect('(');
                std::int64_t x = c.integer();
                c.expect(',');
                std::int64_t y = c.integer();
                c.expect(')');
                check_range(x, line_no);
                check_range(y, line_no);
                st.points.push_back({x, y});
            }
            if (st.kind == StrandKind::Closed && st.points.size() > 1 && st.points.front() == st.points.back())
                st.points.pop_back();
            validate_strand(out, st, line_no);
            out.strands.push_back(std::move(st));
        } else {
            c.fail("unknown keyword");
        }
    }
    if (!have_boundary) throw ParseError("syntax", line_no, "missing boundary line");
    return out;
}

void validate_strands(const StrandSet& s) {
    if (s.boundary_half_width <= 0 || s.boundary_half_width > kMaxCoordinate)
        throw Error("syntax", "boundary half width out of range");
    for (std::size_t i = 0; i < s.strands.size(); ++i) {
        try {
            for (const auto& p : s.strands[i].points) {
                check_range(p.x, 0);
                check_range(p.y, 0);
            }
            validate_strand(s, s.strands[i], 0);
        } catch (const ParseError& e) {
            std::string msg = e.what();
            throw Error(e.code(), "strand " + std::to_string(i) + msg.substr(msg.find(':')));
        }
    }
}

std::string format_divide(const StrandSet& s) {
    std::ostringstream os;
    os << "boundary " << s.boundary_half_width << "\n";
    for (const auto& st : s.strands) {
        os << (st.kind == StrandKind::Open ? "open" : "closed");
        for (const auto& p : st.points) os << " (" << p.x << "," << p.y << ")";
        os << "\n";
    }
    return os.str();
}

} // namespace divlink
