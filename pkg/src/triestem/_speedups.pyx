# cython: language_level=3, boundscheck=False, wraparound=False
# Compiled twin of triestem._fastpath._stem_passes; keep the two in step.


def stem_passes(str word, dict shortcuts, list dispatch, Py_ssize_t min_len):
    cdef str form = word.lower()
    cdef object hit = shortcuts.get(form)
    cdef object candidates, deeper, found
    cdef tuple entry, node, payload
    cdef dict kids
    cdef str key, replacement
    cdef Py_ssize_t index, count, retained, i

    if hit is not None:
        return hit
    if not (form.isascii() and form.isalpha()):
        return word

    key = form[-2:]
    candidates = (<dict>dispatch[0]).get(key)
    while candidates:
        for entry in candidates:
            index = entry[0]
            kids = entry[1]
            payload = entry[2]
            i = len(form) - 3
            while i >= 0 and kids:
                found = kids.get(form[i])
                if found is None:
                    break
                node = <tuple>found
                kids = node[0]
                deeper = node[1]
                if deeper is not None:
                    payload = deeper
                i -= 1
            if payload is None:
                continue
            count = payload[0]
            replacement = payload[1]
            if count == 0 and not replacement:
                continue
            retained = len(form) - count
            if retained < min_len:
                continue
            form = form[:retained] + replacement
            assert retained >= min_len
            if form[-2:] != key:
                key = form[-2:]
                candidates = (<dict>dispatch[index + 1]).get(key)
                break
        else:
            break
    return form
