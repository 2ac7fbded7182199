#pragma once

#include "unipotent/error.hpp"
#include "unipotent/scalar.hpp"
#include "unipotent/multipoly.hpp"
#include "unipotent/sl2.hpp"
#include "unipotent/word.hpp"
#include "unipotent/phi.hpp"
#include "unipotent/random.hpp"
#include "unipotent/submersion.hpp"
#include "unipotent/spray.hpp"
#include "unipotent/fiber.hpp"
#include "unipotent/factorize.hpp"
#include "unipotent/cohn.hpp"
#include "unipotent/obstruction.hpp"
#include "unipotent/io.hpp"
#include "unipotent/verify.hpp"
