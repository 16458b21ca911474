#include "cr/rational.hpp"

namespace cr {

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string GQ::str() const {
    if (im == 0) return re.get_str();
    std::string is = im.get_str() + "i";
    if (im == 1) is = "i";
    if (im == -1) is = "-i";
    if (re == 0) return is;
    if (im > 0) return re.get_str() + "+" + is;
    return re.get_str() + is;
}

GQ gq_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number literal");
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        if (body.empty() || body == "+" ) return GQ::i();
        if (body == "-") return -GQ::i();
        return GQ(Rat(0), rat_from_string(body));
    }
    return GQ(rat_from_string(s));
}

Rat Sampler::rat(long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rat r(num(eng_), den(eng_));
    r.canonicalize();
    return r;
}

Rat Sampler::small_rat(long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rat r(num(eng_), den(eng_));
    r.canonicalize();
    return r;
}

GQ Sampler::gq(long bound) {
    Rat a = rat(bound);
    Rat b = rat(bound);
    return GQ(a, b);
}

GQ Sampler::small_gq(long bound) {
    Rat a = small_rat(bound);
    Rat b = small_rat(bound);
    return GQ(a, b);
}

}  // namespace cr
