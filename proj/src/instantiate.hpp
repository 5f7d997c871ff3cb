#pragma once

// Every template in the library is explicitly instantiated for these types.
#define TROPCLOSURE_FOR_EACH_NUMBER(X) \
  X(::tropclosure::Integer)            \
  X(::tropclosure::Rational)           \
  X(::tropclosure::Float)
