#pragma once

// Minimal JSON-lines value type used by the CLI. Integers are emitted as
// plain decimal literals of any width and parsed back exactly, so
// arbitrary-precision values survive the round trip; generic JSON libraries
// coerce big integers to doubles, which is why this is hand-rolled. Objects
// keep insertion order, making output byte-deterministic.
//
// Supported grammar: objects, arrays, strings, integers (no floats), true,
// false, null.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "quadclass/arith.hpp"

namespace quadclass {

class JsonValue {
public:
    enum class Kind { null, boolean, integer, string, array, object };

    using Object = std::vector<std::pair<std::string, JsonValue>>;
    using Array = std::vector<JsonValue>;

    JsonValue() : data_(nullptr) {}
    JsonValue(bool b) : data_(b) {}
    JsonValue(Integer v) : data_(std::move(v)) {}
    JsonValue(int v) : data_(Integer(v)) {}
    JsonValue(long long v) : data_(Integer(v)) {}
    JsonValue(std::string s) : data_(std::move(s)) {}
    JsonValue(const char* s) : data_(std::string(s)) {}

    static JsonValue object() {
        JsonValue v;
        v.data_ = Object{};
        return v;
    }
    static JsonValue array() {
        JsonValue v;
        v.data_ = Array{};
        return v;
    }

    Kind kind() const { return static_cast<Kind>(data_.index()); }

    bool as_bool() const { return std::get<bool>(data_); }
    const Integer& as_integer() const { return std::get<Integer>(data_); }
    const std::string& as_string() const { return std::get<std::string>(data_); }
    const Array& items() const { return std::get<Array>(data_); }
    const Object& fields() const { return std::get<Object>(data_); }

    JsonValue& set(std::string key, JsonValue v) {
        std::get<Object>(data_).emplace_back(std::move(key), std::move(v));
        return *this;
    }
    void push(JsonValue v) { std::get<Array>(data_).push_back(std::move(v)); }

    const JsonValue* find(std::string_view key) const {
        for (const auto& [k, v] : std::get<Object>(data_))
            if (k == key) return &v;
        return nullptr;
    }

    friend bool operator==(const JsonValue&, const JsonValue&) = default;

    std::string dump() const {
        std::string out;
        dump_to(out);
        return out;
    }

    static JsonValue parse(std::string_view text) {
        std::size_t pos = 0;
        JsonValue v = parse_value(text, pos);
        skip_ws(text, pos);
        if (pos != text.size()) throw std::runtime_error("json: trailing characters");
        return v;
    }

private:
    std::variant<std::nullptr_t, bool, Integer, std::string, Array, Object> data_;

    static void append_escaped(std::string& out, const std::string& s) {
        out += '"';
        for (char ch : s) {
            switch (ch) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(ch) < 0x20) {
                        static const char* hex = "0123456789abcdef";
                        out += "\\u00";
                        out += hex[(ch >> 4) & 0xf];
                        out += hex[ch & 0xf];
                    } else {
                        out += ch;
                    }
            }
        }
        out += '"';
    }

    void dump_to(std::string& out) const {
        switch (kind()) {
            case Kind::null: out += "null"; break;
            case Kind::boolean: out += as_bool() ? "true" : "false"; break;
            case Kind::integer: out += as_integer().str(); break;
            case Kind::string: append_escaped(out, as_string()); break;
            case Kind::array: {
                out += '[';
                bool first = true;
                for (const JsonValue& v : items()) {
                    if (!first) out += ',';
                    first = false;
                    v.dump_to(out);
                }
                out += ']';
                break;
            }
            case Kind::object: {
                out += '{';
                bool first = true;
                for (const auto& [k, v] : fields()) {
                    if (!first) out += ',';
                    first = false;
                    append_escaped(out, k);
                    out += ':';
                    v.dump_to(out);
                }
                out += '}';
                break;
            }
        }
    }

    static void skip_ws(std::string_view t, std::size_t& pos) {
        while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t' || t[pos] == '\n' || t[pos] == '\r'))
            ++pos;
    }

    static void expect(std::string_view t, std::size_t& pos, char c) {
        if (pos >= t.size() || t[pos] != c)
            throw std::runtime_error(std::string("json: expected '") + c + "'");
        ++pos;
    }

    static bool consume(std::string_view t, std::size_t& pos, std::string_view word) {
        if (t.substr(pos, word.size()) == word) {
            pos += word.size();
            return true;
        }
        return false;
    }

    static std::string parse_string(std::string_view t, std::size_t& pos) {
        expect(t, pos, '"');
        std::string out;
        while (pos < t.size() && t[pos] != '"') {
            char c = t[pos++];
            if (c != '\\') {
                out += c;
                continue;
            }
            if (pos >= t.size()) throw std::runtime_error("json: bad escape");
            char e = t[pos++];
            switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case '/': out += '/'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                case 'b': out += '\b'; break;
                case 'f': out += '\f'; break;
                case 'u': {
                    if (pos + 4 > t.size()) throw std::runtime_error("json: bad \\u escape");
                    unsigned code = 0;
                    for (int i = 0; i < 4; ++i) {
                        char h = t[pos++];
                        code <<= 4;
                        if (h >= '0' && h <= '9') code += h - '0';
                        else if (h >= 'a' && h <= 'f') code += h - 'a' + 10;
                        else if (h >= 'A' && h <= 'F') code += h - 'A' + 10;
                        else throw std::runtime_error("json: bad \\u escape");
                    }
                    if (code > 0x7f) throw std::runtime_error("json: non-ascii \\u escape unsupported");
                    out += static_cast<char>(code);
                    break;
                }
                default: throw std::runtime_error("json: bad escape");
            }
        }
        expect(t, pos, '"');
        return out;
    }

    static JsonValue parse_value(std::string_view t, std::size_t& pos) {
        skip_ws(t, pos);
        if (pos >= t.size()) throw std::runtime_error("json: unexpected end");
        const char c = t[pos];
        if (c == '{') {
            ++pos;
            JsonValue obj = object();
            skip_ws(t, pos);
            if (pos < t.size() && t[pos] == '}') {
                ++pos;
                return obj;
            }
            for (;;) {
                skip_ws(t, pos);
                std::string key = parse_string(t, pos);
                skip_ws(t, pos);
                expect(t, pos, ':');
                obj.set(std::move(key), parse_value(t, pos));
                skip_ws(t, pos);
                if (pos < t.size() && t[pos] == ',') {
                    ++pos;
                    continue;
                }
                expect(t, pos, '}');
                return obj;
            }
        }
        if (c == '[') {
            ++pos;
            JsonValue arr = array();
            skip_ws(t, pos);
            if (pos < t.size() && t[pos] == ']') {
                ++pos;
                return arr;
            }
            for (;;) {
                arr.push(parse_value(t, pos));
                skip_ws(t, pos);
                if (pos < t.size() && t[pos] == ',') {
                    ++pos;
                    continue;
                }
                expect(t, pos, ']');
                return arr;
            }
        }
        if (c == '"') return JsonValue(parse_string(t, pos));
        if (consume(t, pos, "true")) return JsonValue(true);
        if (consume(t, pos, "false")) return JsonValue(false);
        if (consume(t, pos, "null")) return JsonValue();
        if (c == '-' || (c >= '0' && c <= '9')) {
            const std::size_t start = pos;
            if (c == '-') ++pos;
            while (pos < t.size() && t[pos] >= '0' && t[pos] <= '9') ++pos;
            if (pos == start + (c == '-' ? 1u : 0u)) throw std::runtime_error("json: bad number");
            if (pos < t.size() && (t[pos] == '.' || t[pos] == 'e' || t[pos] == 'E'))
                throw std::runtime_error("json: non-integer numbers unsupported");
            return JsonValue(Integer(std::string(t.substr(start, pos - start))));
        }
        throw std::runtime_error("json: unexpected character");
    }
};

/// CSV cell encoding: plain tokens only, solution lists as x:y:n;x:y:n.
/// Every emitted cell is free of commas and quotes, so rows never need quoting.
inline std::string csv_join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    return out;
}

}  // namespace quadclass
