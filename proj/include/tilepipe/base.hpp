#ifndef TILEPIPE_BASE_HPP
#define TILEPIPE_BASE_HPP

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tilepipe {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error classes map 1:1 onto CLI exit codes (0 = success).
enum class ErrClass : int {
    usage = 2,          // bad arguments / malformed input file
    validation = 3,     // region or tiling fails its invariants
    cap_exceeded = 4,   // enumeration or complex size cap hit
    routing = 5,        // shell routing failure
    geometry = 6,       // curve intersection / degenerate framing / no generic projection
    inconsistency = 7,  // cross-check mismatch (twist, cycle sums, non-integer twist)
    io = 8,             // file not readable/writable
};

class Error : public std::runtime_error {
  public:
    Error(ErrClass c, const std::string& msg) : std::runtime_error(msg), cls_(c) {}
    ErrClass cls() const { return cls_; }
    int exit_code() const { return static_cast<int>(cls_); }

  private:
    ErrClass cls_;
};

[[noreturn]] inline void fail(ErrClass c, const std::string& msg) { throw Error(c, msg); }

inline void check(bool cond, ErrClass c, const std::string& msg) {
    if (!cond) fail(c, msg);
}

// Parses "p/q" or "p" into an exact rational. Used for the --phi option.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        check(den != 0, ErrClass::usage, "rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        fail(ErrClass::usage, "cannot parse rational: " + s);
    }
}

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Integer 3-vector. Plain cell coordinates use unit steps; all sharp-complex
// and curve geometry uses quarter-lattice coordinates stored x4 (so the paper's
// 1/4, 1/2, 3/4 positions are exact integers).
struct IVec3 {
    int64_t x = 0, y = 0, z = 0;

    friend IVec3 operator+(IVec3 a, IVec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend IVec3 operator-(IVec3 a, IVec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend IVec3 operator*(int64_t k, IVec3 a) { return {k * a.x, k * a.y, k * a.z}; }
    IVec3 operator-() const { return {-x, -y, -z}; }
    friend bool operator==(const IVec3&, const IVec3&) = default;
    friend auto operator<=>(const IVec3&, const IVec3&) = default;

    int64_t operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    int64_t& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline int64_t dot(IVec3 a, IVec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline IVec3 cross(IVec3 a, IVec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline int64_t det3(IVec3 a, IVec3 b, IVec3 c) { return dot(a, cross(b, c)); }

inline IVec3 axis_unit(int axis) {
    IVec3 v;
    v[axis] = 1;
    return v;
}

inline std::string to_string(IVec3 v) {
    std::ostringstream os;
    os << "(" << v.x << "," << v.y << "," << v.z << ")";
    return os.str();
}

}  // namespace tilepipe

#endif
