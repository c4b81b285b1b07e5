#include "doctest.h"

#include "cmkit/field.hpp"

using namespace cmkit;

TEST_CASE("Fp basic arithmetic") {
    Fp a(5, 101), b(97, 101);
    CHECK((a + b).v == 1);  // 102 mod 101
    CHECK((a - b).v == 9);  // 5 - 97 = -92 = 9
    CHECK((a * b).v == 5 * 97 % 101);
    CHECK((-a).v == 96);
    CHECK(Fp(0, 101).is_zero());
    CHECK(Fp(101, 101).is_zero());
    CHECK(Fp(-1, 101).v == 100);  // negative inputs normalize
    CHECK(Fp(1020304, 101) == Fp(1020304 % 101, 101));
}

TEST_CASE("Fp inverse and division") {
    for (long long x = 1; x < 101; ++x) {
        Fp a(x, 101);
        CHECK((a * a.inv()).v == 1);
    }
    Fp a(7, 101), b(13, 101);
    CHECK((a / b) * b == a);
    CHECK_THROWS(Fp(0, 101).inv());
}

TEST_CASE("Fp generic zero promotes to the partner's modulus") {
    Fp z;  // modulus 0: the generic zero
    Fp a(42, 101);
    CHECK((z + a) == a);
    CHECK((a - z) == a);
    CHECK((z * a).is_zero());
    CHECK(z == Fp(0, 101));
}

TEST_CASE("Rat canonicalization") {
    CHECK(Rat(mpz_class(2), mpz_class(4)) == Rat(mpz_class(1), mpz_class(2)));
    CHECK(Rat(mpz_class(-3), mpz_class(-6)) == Rat(mpz_class(1), mpz_class(2)));
    CHECK(Rat(mpz_class(0), mpz_class(7)).is_zero());
    CHECK_THROWS(Rat(mpz_class(1), mpz_class(0)));
    CHECK(Rat(3).str() == "3");
    CHECK(Rat(mpz_class(1), mpz_class(3)).str() == "1/3");
}

TEST_CASE("Rat arithmetic") {
    Rat a(mpz_class(1), mpz_class(2)), b(mpz_class(1), mpz_class(3));
    CHECK(a + b == Rat(mpz_class(5), mpz_class(6)));
    CHECK(a - b == Rat(mpz_class(1), mpz_class(6)));
    CHECK(a * b == Rat(mpz_class(1), mpz_class(6)));
    CHECK(a / b == Rat(mpz_class(3), mpz_class(2)));
    CHECK((a.inv() * a) == Rat(1));
    CHECK((-a) + a == Rat(0));
    CHECK_THROWS(Rat(0).inv());
}

TEST_CASE("scalar_from helpers") {
    Fp sample(1, 101);
    CHECK(scalar_from(-1, sample).v == 100);
    CHECK(scalar_from_str("205", sample).v == 3);
    CHECK(scalar_from(7, Rat(1)) == Rat(7));
    CHECK(scalar_from_str("-12", Rat(1)) == Rat(-12));
}

TEST_CASE("probable_prime") {
    CHECK(probable_prime(2));
    CHECK(probable_prime(101));
    CHECK(probable_prime(2147483647ull));  // 2^31 - 1
    CHECK(!probable_prime(1));
    CHECK(!probable_prime(91));   // 7 * 13
    CHECK(!probable_prime(561));  // Carmichael
}
