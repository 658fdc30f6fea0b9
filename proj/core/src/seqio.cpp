#include "qadic/seqio.hpp"

#include <fstream>
#include <stdexcept>

namespace qadic {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Skips leading '#' comment lines, returns the single digit line, and
// rejects anything after it except trailing blank lines.
std::string read_digit_line(const std::filesystem::path& path, char max_digit) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");

    std::string line;
    std::string digits;
    bool seen_digits = false;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (!seen_digits) {
            if (!line.empty() && line.front() == '#') continue;
            if (line.empty())
                throw std::runtime_error("malformed sequence file '" + path.string() +
                                         "': blank line before digits");
            digits = line;
            seen_digits = true;
        } else if (!line.empty()) {
            throw std::runtime_error("malformed sequence file '" + path.string() +
                                     "': content after the digit line");
        }
    }
    if (!seen_digits)
        throw std::runtime_error("malformed sequence file '" + path.string() +
                                 "': no digit line");
    for (char ch : digits) {
        if (ch < '0' || ch > max_digit)
            throw std::runtime_error("malformed sequence file '" + path.string() +
                                     "': invalid digit '" + std::string(1, ch) + "'");
    }
    return digits;
}

}  // namespace

std::string digits_string(const QuaternarySequence& s) {
    std::string out;
    out.reserve(s.period());
    for (std::uint8_t d : s.digits) out += static_cast<char>('0' + d);
    return out;
}

void write_sequence_file(const std::filesystem::path& path,
                         const QuaternarySequence& s) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "# " << family_name(s.family);
    if (s.family == Family::g1 || s.family == Family::g2)
        out << " p=" << s.param;
    else if (s.family == Family::g3)
        out << " n=" << s.param;
    out << " period=" << s.period() << "\n";
    out << digits_string(s) << "\n";
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_sequence_file(const std::filesystem::path& path, const BinarySequence& s) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "# binary period=" << s.period();
    if (!s.provenance.empty()) out << " " << s.provenance;
    out << "\n";
    for (std::uint8_t b : s.bits) out << static_cast<char>('0' + b);
    out << "\n";
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

QuaternarySequence read_quaternary_file(const std::filesystem::path& path) {
    const std::string digits = read_digit_line(path, '3');
    QuaternarySequence s;
    s.digits.reserve(digits.size());
    for (char ch : digits) s.digits.push_back(static_cast<std::uint8_t>(ch - '0'));
    s.family = Family::external;
    return s;
}

BinarySequence read_binary_file(const std::filesystem::path& path) {
    const std::string digits = read_digit_line(path, '1');
    BinarySequence s;
    s.bits.reserve(digits.size());
    for (char ch : digits) s.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    s.provenance = "file:" + path.string();
    return s;
}

}  // namespace qadic
