#pragma once

#include <mcfl/decompose.hpp>
#include <mcfl/decomposition.hpp>
#include <mcfl/derivation.hpp>
#include <mcfl/error.hpp>
#include <mcfl/grammar_gn.hpp>
#include <mcfl/mcfg.hpp>
#include <mcfl/necklace.hpp>
#include <mcfl/sign_vector.hpp>
#include <mcfl/tucker.hpp>
#include <mcfl/words.hpp>
