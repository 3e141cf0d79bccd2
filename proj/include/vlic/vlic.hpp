#pragma once

#include "vlic/error.hpp"
#include "vlic/gf2.hpp"
#include "vlic/rational.hpp"
#include "vlic/problem.hpp"
#include "vlic/code.hpp"
#include "vlic/constructions.hpp"
#include "vlic/extension.hpp"
#include "vlic/verifier.hpp"
#include "vlic/io.hpp"
