"""Calculus tables as computed by the engine, frozen after checking against the oracle."""

COMPUTED = {
    'omega:w0*a': '(a) w0',
    'omega:w0*b': '(b) w0',
    'omega:w0*c': '(c) w0',
    'omega:w0*d': '(d) w0',
    'omega:w0*f': '(r^-2 * f) w0',
    'omega:w1*a': '(r^-2 * a) w1 + ((-r + r^-1) * b) w+ + ((r^2 - 2 + r^-2) * a) w2',
    'omega:w1*b': '(b) w1 + ((-r + r^-1) * a) w-',
    'omega:w1*c': '(r^-2 * c) w1 + ((-r + r^-1) * d) w+ + ((r^2 - 2 + r^-2) * c) w2',
    'omega:w1*d': '(d) w1 + ((-r + r^-1) * c) w-',
    'omega:w1*f': '(f) w1',
    'omega:w+*a': '(r^-1 * a) w+',
    'omega:w+*b': '(r^-1 * b) w+ + ((-1 + r^-2) * a) w2',
    'omega:w+*c': '(r^-1 * c) w+',
    'omega:w+*d': '(r^-1 * d) w+ + ((-1 + r^-2) * c) w2',
    'omega:w+*f': '(s * f) w+',
    'omega:w-*a': '(r^-1 * a) w- + ((-1 + r^-2) * b) w2',
    'omega:w-*b': '(r^-1 * b) w-',
    'omega:w-*c': '(r^-1 * c) w- + ((-1 + r^-2) * d) w2',
    'omega:w-*d': '(r^-1 * d) w-',
    'omega:w-*f': '(s^-1 * f) w-',
    'omega:w2*a': '(a) w2',
    'omega:w2*b': '(r^-2 * b) w2',
    'omega:w2*c': '(c) w2',
    'omega:w2*d': '(r^-2 * d) w2',
    'omega:w2*f': '(f) w2',
    'chi:χ0(a)': '0',
    'chi:χ0(b)': '0',
    'chi:χ0(c)': '0',
    'chi:χ0(d)': '0',
    'chi:χ0(f)': '-1 + r^-2',
    'chi:χ1(a)': '-1 + r^-2',
    'chi:χ1(b)': '0',
    'chi:χ1(c)': '0',
    'chi:χ1(d)': '0',
    'chi:χ1(f)': '0',
    'chi:χ+(a)': '0',
    'chi:χ+(b)': '0',
    'chi:χ+(c)': '-r + r^-1',
    'chi:χ+(d)': '0',
    'chi:χ+(f)': '0',
    'chi:χ-(a)': '0',
    'chi:χ-(b)': '-r + r^-1',
    'chi:χ-(c)': '0',
    'chi:χ-(d)': '0',
    'chi:χ-(f)': '0',
    'chi:χ2(a)': 'r^2 - 2 + r^-2',
    'chi:χ2(b)': '0',
    'chi:χ2(c)': '0',
    'chi:χ2(d)': '-1 + r^-2',
    'chi:χ2(f)': '0',
    'conv:χ0*a': '0',
    'conv:χ0*b': '0',
    'conv:χ0*c': '0',
    'conv:χ0*d': '0',
    'conv:χ0*f': '(-1 + r^-2) * f',
    'conv:χ1*a': '(-1 + r^-2) * a',
    'conv:χ1*b': '0',
    'conv:χ1*c': '(-1 + r^-2) * c',
    'conv:χ1*d': '0',
    'conv:χ1*f': '0',
    'conv:χ+*a': '(-r + r^-1) * b',
    'conv:χ+*b': '0',
    'conv:χ+*c': '(-r + r^-1) * d',
    'conv:χ+*d': '0',
    'conv:χ+*f': '0',
    'conv:χ-*a': '0',
    'conv:χ-*b': '(-r + r^-1) * a',
    'conv:χ-*c': '0',
    'conv:χ-*d': '(-r + r^-1) * c',
    'conv:χ-*f': '0',
    'conv:χ2*a': '(r^2 - 2 + r^-2) * a',
    'conv:χ2*b': '(-1 + r^-2) * b',
    'conv:χ2*c': '(r^2 - 2 + r^-2) * c',
    'conv:χ2*d': '(-1 + r^-2) * d',
    'conv:χ2*f': '0',
    'd:a': '((-1 + r^-2) * a) w1 + ((-r + r^-1) * b) w+ + ((r^2 - 2 + r^-2) * a) w2',
    'd:b': '((-r + r^-1) * a) w- + ((-1 + r^-2) * b) w2',
    'd:c': '((-1 + r^-2) * c) w1 + ((-r + r^-1) * d) w+ + ((r^2 - 2 + r^-2) * c) w2',
    'd:d': '((-r + r^-1) * c) w- + ((-1 + r^-2) * d) w2',
    'd:f': '((-1 + r^-2) * f) w0',
}
