#include "opmult/formal_sum.hpp"

namespace opmult {

nlohmann::json integer_to_json(const mpz_class& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

} // namespace opmult
