#include "vidreq/core/stopwords.hpp"

namespace vidreq {

const WordSet& english_stopwords() {
    static const WordSet words = {
        "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're", "you've",
        "you'll", "you'd", "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself",
        "she", "she's", "her", "hers", "herself", "it", "it's", "its", "itself", "they", "them",
        "their", "theirs", "themselves", "what", "which", "who", "whom", "this", "that", "that'll",
        "these", "those", "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
        "had", "having", "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
        "because", "as", "until", "while", "of", "at", "by", "for", "with", "about", "against",
        "between", "into", "through", "during", "before", "after", "above", "below", "to", "from",
        "up", "down", "in", "out", "on", "off", "over", "under", "again", "further", "then", "once",
        "here", "there", "when", "where", "why", "how", "all", "any", "both", "each", "few", "more",
        "most", "other", "some", "such", "no", "nor", "not", "only", "own", "same", "so", "than",
        "too", "very", "can", "will", "just", "don", "don't", "should", "should've", "now", "ain",
        "aren", "aren't", "couldn", "couldn't", "didn", "didn't", "doesn", "doesn't", "hadn",
        "hadn't", "hasn", "hasn't", "haven", "haven't", "isn", "isn't", "ma", "mightn", "mightn't",
        "mustn", "mustn't", "needn", "needn't", "shan", "shan't", "shouldn", "shouldn't", "wasn",
        "wasn't", "weren", "weren't", "won", "won't", "wouldn", "wouldn't", "i'm", "i've", "i'll",
        "i'd", "we're", "we've", "they're", "let's", "get", "got", "really", "also", "would", "could",
    };
    return words;
}

namespace {

const WordSet& german() {
    static const WordSet w = {
        "der", "die", "das", "und", "ist", "ein", "eine", "nicht", "sehr", "ich", "du", "er", "sie",
        "es", "wir", "ihr", "mit", "auf", "für", "von", "zu", "den", "dem", "des", "im", "auch",
        "sich", "aber", "noch", "wie", "was", "wenn", "nur", "oder", "mein", "dein", "kann", "hat",
    };
    return w;
}

const WordSet& french() {
    static const WordSet w = {
        "le", "la", "les", "un", "une", "des", "et", "est", "je", "tu", "il", "elle", "nous", "vous",
        "ils", "de", "du", "en", "que", "qui", "pas", "ne", "pour", "sur", "avec", "dans", "ce",
        "cette", "mais", "ou", "très", "mon", "ma", "mes", "au", "aux", "c'est", "sont",
    };
    return w;
}

const WordSet& spanish() {
    static const WordSet w = {
        "el", "la", "los", "las", "un", "una", "y", "es", "yo", "tú", "él", "ella", "de", "del",
        "en", "que", "no", "por", "para", "con", "se", "su", "lo", "pero", "muy", "mi", "más",
        "como", "está", "son", "este", "esta", "al", "le", "me", "hay",
    };
    return w;
}

const WordSet& portuguese() {
    static const WordSet w = {
        "o", "a", "os", "as", "um", "uma", "e", "é", "eu", "ele", "ela", "de", "do", "da", "dos",
        "das", "em", "no", "na", "que", "não", "por", "para", "com", "se", "seu", "sua", "mas",
        "muito", "meu", "minha", "mais", "como", "está", "são", "isso",
    };
    return w;
}

const WordSet& italian() {
    static const WordSet w = {
        "il", "lo", "la", "i", "gli", "le", "un", "una", "e", "è", "io", "lui", "lei", "di", "del",
        "della", "in", "che", "non", "per", "con", "si", "suo", "ma", "molto", "mio", "più",
        "come", "sono", "questo", "questa", "ho", "ha", "anche",
    };
    return w;
}

const WordSet& dutch() {
    static const WordSet w = {
        "de", "het", "een", "en", "is", "ik", "jij", "je", "hij", "zij", "wij", "van", "in", "op",
        "met", "voor", "niet", "dat", "die", "maar", "ook", "zijn", "heel", "mijn", "te", "naar",
        "er", "wat", "aan", "dit",
    };
    return w;
}

}  // namespace

const std::vector<StopwordProfile>& stopword_profiles() {
    static const std::vector<StopwordProfile> profiles = {
        {"en", &english_stopwords()}, {"de", &german()},     {"fr", &french()},
        {"es", &spanish()},           {"pt", &portuguese()}, {"it", &italian()},
        {"nl", &dutch()},
    };
    return profiles;
}

}  // namespace vidreq
